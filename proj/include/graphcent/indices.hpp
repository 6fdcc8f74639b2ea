#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graphcent/graph.hpp"

namespace graphcent {

/// Vertices attaining the maximum degree, and how many there are (|M|).
struct MaxDegreeSet {
    std::vector<int> members;
    int multiplicity = 0;
};

/// Outcome of the N/P vertex split behind the monotonicity argument: N holds
/// the vertices whose degree lies strictly below the degree-power-weighted
/// geometric mean, P the rest (including zero-degree vertices, whose
/// derivative term vanishes).
struct NpSplit {
    std::vector<int> n_set;
    std::vector<int> p_set;
    double threshold = 0.0; ///< exp(sum d^k ln d / sum d^k) over positive degrees
};

enum class CaseLabel { A, B, boundary };

/// How the crossing search concluded.
enum class CrossingKind {
    finite,          ///< k* located by bisection with |T_{d,k*} - T_Q| <= 1e-9
    asymptotic,      ///< T_{d,k_max} < T_Q - 1e-9: crossing only beyond k_max / in the limit
    at_k_equals_one, ///< T_{d,1} already equals T_Q within tolerance
};

struct CrossingResult {
    CrossingKind kind;
    double k;    ///< the located k* (finite / at_k_equals_one), or k_max (asymptotic)
    double t_dk; ///< T_{d,k} at that k
};

/// The dichotomy verdict for a connected graph: compares the degree-Theil
/// supremum ln n - ln|M| against T_Q.
///
/// case A  : threshold >  t_q  (the degree-Theil family crosses T_Q)
/// case B  : threshold <  t_q  (T_{d,k} <= T_Q for every k)
/// boundary: |threshold - t_q| <= 1e-9
///
/// sufficient_condition_holds evaluates the degree-only test
/// (sum d)^2 / (sum d + sum d^2) >= |M| (exact integer arithmetic), which
/// implies case A or boundary. crossing is populated for case A only.
struct DichotomyVerdict {
    CaseLabel case_label;
    double threshold;
    double t_q;
    bool sufficient_condition_holds;
    std::optional<CrossingResult> crossing;
};

/// Theil inequality index of a nonnegative characteristic vector (nats):
/// T = (1/n) sum (x_i/mu) ln(x_i/mu), with 0 ln 0 := 0.
///
/// 0 <= T <= ln n; T = 0 iff all x_i are equal (exactly 0.0 for uniform
/// input); T = ln n iff exactly one x_i is nonzero. Invariant under
/// permutation and positive scaling. A vector with no positive entry — or
/// any negative entry, which the characteristic-vector domain excludes —
/// raises errc::all_zero.
double theil_index(const std::vector<double>& x);

/// Degree-power Theil index T_{d,k} = theil_index of x_i = d_i^k (nats),
/// equal to ln n - H_{d,k} with H_{d,k} the Shannon entropy of the k-th
/// power relative degree distribution. Computed on degrees normalized by
/// the maximum degree (Theil is scale-invariant), so large k cannot
/// overflow. Requires k > 0 (errc::invalid_exponent) and m >= 1
/// (errc::empty_graph). Exactly 0.0 on regular graphs.
double degree_theil(const Graph& g, double k);

/// Von Neumann Theil index T_Q = ln n - H(rho_G) (nats): the quantum
/// relative entropy between rho_G and the maximally mixed state I/n.
/// Requires m >= 1. Satisfies T_Q >= ln n - ln(n-1) > 0 and
/// T_Q >= degree_theil(g, 1).
double von_neumann_theil(const Graph& g);

/// Generalized (Renyi-p) von Neumann Theil index T_Q^(p) = ln n - H^(p)
/// (nats). Nondecreasing in p; the p -> 1 limit is von_neumann_theil.
/// Requires p > 0, p != 1 (errc::invalid_order) and m >= 1.
double generalized_theil(const Graph& g, double p);

/// Jain fairness index J = (sum d)^2 / (n sum d^2), computed in exact
/// integer arithmetic before the final division. 1/n <= J <= 1; J = 1 iff
/// the vector is uniform (exactly 1.0 on regular graphs). Requires
/// sum d > 0 (errc::empty_graph).
double jain_index(const std::vector<int>& d);

/// Freeman degree centralization C_D = sum(max_j d_j - d_i) / ((n-1)(n-2)).
/// 0 <= C_D <= 1; the star attains exactly 1, regular graphs exactly 0.
/// Requires n >= 3 (errc::too_small).
double freeman_degree_centralization(const Graph& g);

/// Betweenness centrality of every vertex under the ordered-pair
/// convention: g_v = sum over ordered (s,t), s != t, v distinct from both,
/// of sigma_st(v) / sigma_st, within each connected component. Computed by
/// Brandes' single-source accumulation; the generic implementation below
/// can be instantiated over an exact number type, which is how the test
/// suite proves it equivalent to brute-force path enumeration.
std::vector<double> betweenness(const Graph& g);

/// Freeman betweenness centralization
/// C_B = sum(max_j g_j - g_i) / ((n-1)^2 (n-2)). The ordered-pair
/// convention makes the star score exactly 1. Requires n >= 3.
double freeman_betweenness_centralization(const Graph& g);

/// Argmax set of a degree vector. Requires a nonempty vector
/// (errc::too_small).
MaxDegreeSet max_degree_set(const std::vector<int>& d);

/// Split vertices into N (degree strictly below the degree-power-weighted
/// geometric mean threshold) and P (at or above; zero-degree vertices go to
/// P since their derivative term is identically zero). Comparisons run in
/// the log domain with a 1e-12 guard so exact-regular input lands entirely
/// in P. Requires k > 0 (errc::invalid_exponent) and sum d > 0
/// (errc::empty_graph).
NpSplit np_set_split(const std::vector<int>& d, double k);

/// Classify a connected graph into the dichotomy (see DichotomyVerdict).
/// Requires connectivity (errc::disconnected).
DichotomyVerdict classify_dichotomy(const Graph& g);

/// Locate the exponent k* in [1, k_max] with T_{d,k*} = T_Q by bisection
/// (value tolerance 1e-9), for case-A graphs only (errc::wrong_case
/// otherwise). Monotonicity of T_{d,k} in k makes the bracket valid:
/// T_{d,1} <= T_Q and sup_k T_{d,k} = ln n - ln|M| > T_Q. Returns
/// at_k_equals_one when T_{d,1} already meets T_Q, and asymptotic when even
/// T_{d,k_max} stays more than 1e-9 below T_Q.
CrossingResult find_crossing_k(const Graph& g, double k_max = 200.0);

/// True iff T_{d,k} is nondecreasing along the ascending grid within a
/// 1e-10 slack.
bool monotonicity_check(const Graph& g, const std::vector<double>& k_grid);

/// Generic Brandes accumulation, templated on the arithmetic type so tests
/// can run it over exact rationals. Num must construct from int and support
/// +, /, *, +=. Both sigma (path counts) and the dependency accumulation
/// run in Num.
template <class Num>
std::vector<Num> betweenness_impl(const Graph& g) {
    const int n = g.vertex_count();
    const auto& adj = g.adjacency();
    std::vector<Num> cb(n, Num(0));
    std::vector<int> dist(n);
    std::vector<Num> sigma(n, Num(0));
    std::vector<Num> delta(n, Num(0));
    std::vector<std::vector<int>> pred(n);
    std::vector<int> order;
    std::vector<int> queue(n);
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), Num(0));
        std::fill(delta.begin(), delta.end(), Num(0));
        for (auto& p : pred) p.clear();
        order.clear();

        int head = 0;
        int tail = 0;
        dist[s] = 0;
        sigma[s] = Num(1);
        queue[tail++] = s;
        while (head < tail) {
            const int v = queue[head++];
            order.push_back(v);
            for (const int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        // Reverse BFS order: accumulate dependencies toward the source.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (const int v : pred[w]) {
                delta[v] += sigma[v] / sigma[w] * (Num(1) + delta[w]);
            }
            if (w != s) {
                cb[w] += delta[w];
            }
        }
    }
    return cb;
}

} // namespace graphcent
