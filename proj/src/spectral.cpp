#include "graphcent/spectral.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace graphcent {

Eigen::MatrixXd density_matrix(const Graph& g) {
    if (g.edge_count() == 0) {
        throw_error(errc::empty_graph, "density matrix needs m >= 1 (trace of L is 2m)");
    }
    return laplacian(g) / (2.0 * g.edge_count());
}

Spectrum eigenvalues_sym(const Eigen::MatrixXd& m, PsdPolicy policy) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw_error(errc::not_symmetric, "matrix is not symmetric within 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw_error(errc::not_symmetric, "eigendecomposition did not converge");
    }
    Spectrum spectrum;
    const auto& values = solver.eigenvalues(); // ascending
    spectrum.eigenvalues.assign(values.data(), values.data() + values.size());
    if (policy == PsdPolicy::expect_psd && !spectrum.eigenvalues.empty()) {
        const double lambda_max = spectrum.eigenvalues.back();
        const double eps = 1e-10 * std::max(1.0, lambda_max);
        for (double& lambda : spectrum.eigenvalues) {
            if (lambda < -eps) {
                throw_error(errc::not_psd, "eigenvalue " + std::to_string(lambda) +
                                               " below the clamp window " + std::to_string(-eps));
            }
            if (lambda < 0.0) {
                lambda = 0.0;
                ++spectrum.clamped_count;
            }
        }
    }
    return spectrum;
}

double von_neumann_entropy(const Eigen::MatrixXd& rho) {
    const Spectrum spectrum = eigenvalues_sym(rho, PsdPolicy::expect_psd);
    double h = 0.0;
    for (const double lambda : spectrum.eigenvalues) {
        if (lambda > 0.0) {
            h -= lambda * std::log(lambda);
        }
    }
    // Guard against -0.0 / tiny negative round-off on pure states.
    return h < 0.0 ? 0.0 : h;
}

double renyi_entropy(const Eigen::MatrixXd& rho, double p) {
    if (p <= 0.0 || p == 1.0) {
        throw_error(errc::invalid_order, "Renyi order must satisfy p > 0, p != 1; got " +
                                             std::to_string(p));
    }
    const Spectrum spectrum = eigenvalues_sym(rho, PsdPolicy::expect_psd);
    // For p < 1 the map lambda -> lambda^p amplifies round-off near zero
    // (e.g. sqrt(1e-16) = 1e-8), so eigenvalues inside the solver's noise
    // band are treated as exact zeros rather than summed.
    const double lambda_max = spectrum.eigenvalues.empty() ? 0.0 : spectrum.eigenvalues.back();
    const double cutoff = 1e-12 * std::max(1.0, lambda_max);
    double sum = 0.0;
    for (const double lambda : spectrum.eigenvalues) {
        if (lambda > cutoff) {
            sum += std::pow(lambda, p);
        }
    }
    return std::log(sum) / (1.0 - p);
}

double renyi2_entropy_degree_form(const std::vector<int>& d) {
    long long sum_d = 0;
    long long sum_d2 = 0;
    for (const int di : d) {
        sum_d += di;
        sum_d2 += static_cast<long long>(di) * di;
    }
    if (sum_d <= 0) {
        throw_error(errc::empty_graph, "degree form needs at least one edge");
    }
    const double num = static_cast<double>(sum_d) * static_cast<double>(sum_d);
    return std::log(num / static_cast<double>(sum_d + sum_d2));
}

} // namespace graphcent
