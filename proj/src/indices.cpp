#include "graphcent/indices.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "graphcent/spectral.hpp"

namespace graphcent {

namespace {

constexpr double kClassifyTol = 1e-9;  // boundary band / identity tolerance
constexpr double kRoundoffTol = 1e-12; // round-off guard on analytically-signed sums

double ln_vertex_count(const Graph& g) { return std::log(static_cast<double>(g.vertex_count())); }

void require_edges(const Graph& g, const char* op) {
    if (g.edge_count() == 0) {
        throw_error(errc::empty_graph, std::string(op) + " needs m >= 1");
    }
}

} // namespace

double theil_index(const std::vector<double>& x) {
    if (x.empty()) {
        throw_error(errc::all_zero, "characteristic vector is empty");
    }
    double sum = 0.0;
    for (const double xi : x) {
        if (xi < 0.0) {
            throw_error(errc::all_zero,
                        "characteristic vector must be nonnegative with a positive entry");
        }
        sum += xi;
    }
    if (sum <= 0.0) {
        throw_error(errc::all_zero, "characteristic vector has no positive entry");
    }
    const double n = static_cast<double>(x.size());
    const double mu = sum / n;
    double t = 0.0;
    for (const double xi : x) {
        if (xi > 0.0) { // 0 ln 0 := 0
            const double r = xi / mu;
            t += r * std::log(r);
        }
    }
    t /= n;
    // T >= 0 analytically; absorb round-off so uniform input reports 0 exactly.
    return (t < 0.0 && t > -kRoundoffTol) ? 0.0 : t;
}

double degree_theil(const Graph& g, double k) {
    if (k <= 0.0) {
        throw_error(errc::invalid_exponent, "degree-Theil exponent must be positive, got " +
                                                std::to_string(k));
    }
    require_edges(g, "degree_theil");
    const std::vector<int> d = degrees(g);
    const int dmax = *std::max_element(d.begin(), d.end());
    // Theil is invariant under positive scaling, so use (d/dmax)^k in [0,1]:
    // immune to overflow for any k in the supported range.
    std::vector<double> x;
    x.reserve(d.size());
    for (const int di : d) {
        x.push_back(di == 0 ? 0.0 : std::pow(static_cast<double>(di) / dmax, k));
    }
    return theil_index(x);
}

double von_neumann_theil(const Graph& g) {
    require_edges(g, "von_neumann_theil");
    return ln_vertex_count(g) - von_neumann_entropy(density_matrix(g));
}

double generalized_theil(const Graph& g, double p) {
    require_edges(g, "generalized_theil");
    return ln_vertex_count(g) - renyi_entropy(density_matrix(g), p);
}

double jain_index(const std::vector<int>& d) {
    long long sum_d = 0;
    long long sum_d2 = 0;
    for (const int di : d) {
        sum_d += di;
        sum_d2 += static_cast<long long>(di) * di;
    }
    if (sum_d <= 0) {
        throw_error(errc::empty_graph, "Jain index needs a nonzero degree sum");
    }
    const long long n = static_cast<long long>(d.size());
    return static_cast<double>(sum_d * sum_d) / static_cast<double>(n * sum_d2);
}

double freeman_degree_centralization(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) {
        throw_error(errc::too_small, "degree centralization needs n >= 3, got " +
                                         std::to_string(n));
    }
    const std::vector<int> d = degrees(g);
    const int dmax = *std::max_element(d.begin(), d.end());
    long long num = 0;
    for (const int di : d) num += dmax - di;
    return static_cast<double>(num) /
           static_cast<double>(static_cast<long long>(n - 1) * (n - 2));
}

std::vector<double> betweenness(const Graph& g) { return betweenness_impl<double>(g); }

double freeman_betweenness_centralization(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) {
        throw_error(errc::too_small, "betweenness centralization needs n >= 3, got " +
                                         std::to_string(n));
    }
    const std::vector<double> b = betweenness(g);
    const double bmax = *std::max_element(b.begin(), b.end());
    double num = 0.0;
    for (const double bi : b) num += bmax - bi;
    const double den = static_cast<double>(static_cast<long long>(n - 1) * (n - 1) * (n - 2));
    return num / den;
}

MaxDegreeSet max_degree_set(const std::vector<int>& d) {
    if (d.empty()) {
        throw_error(errc::too_small, "max_degree_set needs n >= 1");
    }
    const int dmax = *std::max_element(d.begin(), d.end());
    MaxDegreeSet result;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        if (d[i] == dmax) result.members.push_back(i);
    }
    result.multiplicity = static_cast<int>(result.members.size());
    return result;
}

NpSplit np_set_split(const std::vector<int>& d, double k) {
    if (k <= 0.0) {
        throw_error(errc::invalid_exponent, "split exponent must be positive, got " +
                                                std::to_string(k));
    }
    long long sum_d = 0;
    for (const int di : d) sum_d += di;
    if (sum_d <= 0) {
        throw_error(errc::empty_graph, "N/P split needs a nonzero degree sum");
    }
    const int dmax = *std::max_element(d.begin(), d.end());
    // Degree-power-weighted mean of ln d over positive degrees; weights are
    // rescaled by dmax^k (a common factor) to stay in [0,1].
    double weight_sum = 0.0;
    double weighted_log = 0.0;
    for (const int di : d) {
        if (di > 0) {
            const double w = std::pow(static_cast<double>(di) / dmax, k);
            weight_sum += w;
            weighted_log += w * std::log(static_cast<double>(di));
        }
    }
    const double mean_log = weighted_log / weight_sum;

    NpSplit split;
    split.threshold = std::exp(mean_log);
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        // Zero-degree vertices have an identically-zero derivative term and
        // belong to P; comparisons run in the log domain with a round-off
        // guard so exactly-regular input lands entirely in P.
        if (d[i] > 0 && std::log(static_cast<double>(d[i])) < mean_log - kRoundoffTol) {
            split.n_set.push_back(i);
        } else {
            split.p_set.push_back(i);
        }
    }
    return split;
}

namespace {

struct CaseCore {
    CaseLabel label;
    double threshold;
    double t_q;
    bool sufficient;
};

CaseCore classify_core(const Graph& g) {
    if (!is_connected(g)) {
        throw_error(errc::disconnected, "the dichotomy requires a connected graph");
    }
    const std::vector<int> d = degrees(g);
    const MaxDegreeSet m = max_degree_set(d);
    CaseCore core{};
    core.threshold = ln_vertex_count(g) - std::log(static_cast<double>(m.multiplicity));
    core.t_q = von_neumann_theil(g);
    if (std::abs(core.threshold - core.t_q) <= kClassifyTol) {
        core.label = CaseLabel::boundary;
    } else {
        core.label = core.threshold > core.t_q ? CaseLabel::A : CaseLabel::B;
    }
    // Degree-only sufficient condition (exact in 64-bit integers):
    // (sum d)^2 >= |M| (sum d + sum d^2).
    long long sum_d = 0;
    long long sum_d2 = 0;
    for (const int di : d) {
        sum_d += di;
        sum_d2 += static_cast<long long>(di) * di;
    }
    core.sufficient = sum_d * sum_d >= m.multiplicity * (sum_d + sum_d2);
    return core;
}

} // namespace

DichotomyVerdict classify_dichotomy(const Graph& g) {
    const CaseCore core = classify_core(g);
    DichotomyVerdict verdict;
    verdict.case_label = core.label;
    verdict.threshold = core.threshold;
    verdict.t_q = core.t_q;
    verdict.sufficient_condition_holds = core.sufficient;
    if (core.label == CaseLabel::A) {
        verdict.crossing = find_crossing_k(g);
    }
    return verdict;
}

CrossingResult find_crossing_k(const Graph& g, double k_max) {
    const CaseCore core = classify_core(g);
    if (core.label != CaseLabel::A) {
        throw_error(errc::wrong_case, "crossing search is defined for case-A graphs only");
    }
    const double t_q = core.t_q;
    const double t1 = degree_theil(g, 1.0);
    if (std::abs(t1 - t_q) <= kClassifyTol) {
        return {CrossingKind::at_k_equals_one, 1.0, t1};
    }
    const double t_end = degree_theil(g, k_max);
    if (t_end < t_q - kClassifyTol) {
        return {CrossingKind::asymptotic, k_max, t_end};
    }
    // T_{d,k} is continuous and nondecreasing with T_{d,1} < T_Q <= T_{d,k_max}
    // (up to tolerance), so bisection converges on a crossing value.
    double lo = 1.0;
    double hi = k_max;
    double mid = k_max;
    double t_mid = t_end;
    for (int iter = 0; iter < 500; ++iter) {
        mid = 0.5 * (lo + hi);
        t_mid = degree_theil(g, mid);
        if (std::abs(t_mid - t_q) <= kClassifyTol) {
            return {CrossingKind::finite, mid, t_mid};
        }
        (t_mid < t_q ? lo : hi) = mid;
    }
    return {CrossingKind::finite, mid, t_mid};
}

bool monotonicity_check(const Graph& g, const std::vector<double>& k_grid) {
    double previous = -std::numeric_limits<double>::infinity();
    for (const double k : k_grid) {
        const double t = degree_theil(g, k);
        if (t < previous - 1e-10) {
            return false;
        }
        previous = t;
    }
    return true;
}

} // namespace graphcent
