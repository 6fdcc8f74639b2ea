#pragma once

#include <vector>

#include <Eigen/Dense>

#include "graphcent/graph.hpp"

namespace graphcent {

/// Eigenvalues of a symmetric matrix, sorted ascending, together with the
/// number of slightly negative values lifted to zero by the PSD clamp.
struct Spectrum {
    std::vector<double> eigenvalues;
    int clamped_count = 0;
};

/// Whether eigenvalues_sym should enforce positive semi-definiteness.
enum class PsdPolicy {
    none,       ///< report eigenvalues as computed, no clamping
    expect_psd, ///< clamp [-eps, 0) to 0; anything below eps is a hard error
};

/// Trace-normalized Laplacian rho_G = L / Tr L = L / (2m).
/// Symmetric, PSD, unit trace. Requires m >= 1 (errc::empty_graph otherwise:
/// the trace would be zero and the state undefined).
Eigen::MatrixXd density_matrix(const Graph& g);

/// Eigenvalues of a real symmetric matrix, ascending.
///
/// The input must be symmetric within 1e-12 (relative to its largest entry);
/// otherwise errc::not_symmetric. Under PsdPolicy::expect_psd, eigenvalues in
/// [-eps, 0) with eps = 1e-10 * max(1, lambda_max) are clamped to 0 and
/// counted; an eigenvalue below -eps raises errc::not_psd rather than being
/// silently repaired.
Spectrum eigenvalues_sym(const Eigen::MatrixXd& m, PsdPolicy policy = PsdPolicy::none);

/// Von Neumann entropy H = -sum lambda_i ln lambda_i (nats, 0 ln 0 := 0)
/// of a density matrix. Satisfies 0 <= H <= ln n, and H <= ln(n-1) for
/// graph density matrices.
double von_neumann_entropy(const Eigen::MatrixXd& rho);

/// Renyi-p entropy H^(p) = ln(sum lambda_i^p) / (1 - p) (nats) of a density
/// matrix. Requires p > 0, p != 1 (errc::invalid_order); the p -> 1 limit is
/// von_neumann_entropy and is not special-cased here.
double renyi_entropy(const Eigen::MatrixXd& rho, double p);

/// Degree closed form of the Renyi-2 entropy of a graph's density matrix:
/// H_2 = ln((sum d)^2 / (sum d + sum d^2)). Agrees with
/// renyi_entropy(density_matrix(g), 2) within 1e-9 on every graph.
/// Requires sum d > 0 (errc::empty_graph).
double renyi2_entropy_degree_form(const std::vector<int>& d);

} // namespace graphcent
