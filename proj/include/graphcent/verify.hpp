#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphcent {

/// Outcome of one verification suite: how many checks ran, how many failed,
/// and a bounded list of failure descriptions.
struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages; ///< first few failure details
};

struct VerifyConfig {
    int trials = 1000;       ///< random graphs / vectors per randomized suite
    std::uint64_t seed = 7;  ///< base seed; suites derive their own streams
    int n_max = 12;          ///< largest random-graph size (betweenness suite caps at 8)
};

/// Run the full invariant battery:
///   core_bounds         T_{d,1} <= T_Q + 1e-9; H <= ln(n-1) + 1e-9;
///                       statement-B grid bound, the degree-only sufficient
///                       condition, and the H-form/T-form verdict agreement
///                       on the same sampled graphs
///   monotonicity        T_{d,k} nondecreasing over the default k-grid
///   limit_at_k200       |T_{d,200} - (ln n - ln|M|)| <= 1e-4 on the catalog
///   renyi2_identity     eigenvalue H^(2) vs degree closed form within 1e-9
///   jain_pairing        T_Q^(2) >= -ln J - 1e-10
///   threshold_split     max_{i in N} d_i <= min_{i in P} d_i on random
///                       degree vectors, k in {0.5,1,2,5}
///   betweenness_oracle  accumulation algorithm vs brute-force path
///                       enumeration on all graphs with n <= 8: exact
///                       equality over rationals, and the double
///                       instantiation within 1e-12
/// Deterministic for a fixed config.
std::vector<SuiteResult> run_verification(const VerifyConfig& config);

} // namespace graphcent
