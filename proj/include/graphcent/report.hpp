#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphcent/graph.hpp"
#include "graphcent/indices.hpp"

namespace graphcent {

/// Rendering targets offered by the CLI. All three carry the same numeric
/// values at the emitted precision (12 significant digits).
enum class OutputFormat { json, csv, markdown_table };

/// Aggregated per-graph index report.
///
/// The dichotomy verdict is present only for connected graphs (it
/// is defined under a connectivity hypothesis); every other field is
/// well-defined whenever m >= 1.
struct CentralizationReport {
    std::string id;      ///< catalog name or source label
    std::string hash;    ///< 64-bit FNV-1a of the canonical edge list, hex
    int n = 0;
    int m = 0;
    bool connected = false;
    std::vector<std::pair<double, double>> t_dk;  ///< (k, T_{d,k}) over the k-grid
    double t_q = 0.0;
    std::vector<std::pair<double, double>> t_qp;  ///< (p, T_Q^(p)) over the p-grid
    double c_d = 0.0;
    double c_b = 0.0;
    double jain = 0.0;
    double minus_ln_jain = 0.0;
    std::optional<DichotomyVerdict> verdict;
};

/// Default grids used by the CLI and the experiments.
const std::vector<double>& default_k_grid();  // {0.25,0.5,1,2,4,8,16,50,200}
const std::vector<double>& default_p_grid();  // {0.5,2,3}

/// Deterministic 64-bit FNV-1a hash of the canonical form "n;i,j;i,j;...".
std::string graph_hash(const Graph& g);

/// Compute every index of the report for one graph. Requires m >= 1 and
/// n >= 3 (the Freeman denominators); propagates the index errors
/// otherwise.
CentralizationReport make_report(const Graph& g, const std::string& id,
                                 const std::vector<double>& k_grid,
                                 const std::vector<double>& p_grid);

/// Format one value with 12 significant digits ("%.12g"), the single
/// formatter behind every renderer, so all formats agree byte-for-byte
/// on the numbers.
std::string format_sig(double v);

/// Render a report. When bits is true, nats-denominated fields (T_{d,k},
/// T_Q, T_Q^(p), -ln J and the verdict's threshold/t_q) are divided by
/// ln 2 for display; dimensionless fields (C_D, C_B, J, k, p) are
/// unchanged. Comparisons and verdicts are always computed in nats.
std::string render_report(const CentralizationReport& report, OutputFormat format, bool bits);

} // namespace graphcent
