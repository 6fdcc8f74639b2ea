#include "graphcent/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphcent/catalog.hpp"
#include "graphcent/experiments.hpp"
#include "graphcent/indices.hpp"
#include "graphcent/report.hpp"
#include "graphcent/spectral.hpp"

namespace graphcent {

namespace {

using Rat = boost::multiprecision::cpp_rational;

constexpr size_t kMaxMessages = 8;

struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    template <class MessageFn>
    void check(bool ok, MessageFn&& message) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (result.messages.size() < kMaxMessages) {
                result.messages.push_back(message());
            }
        }
    }
};

// Deterministic integer draws independent of standard-library distribution
// internals (same policy as random_graph).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t raw() { return eng(); }
};

Graph sample_connected_graph(Rng& rng, int n_lo, int n_hi) {
    const int n = rng.uniform(n_lo, n_hi);
    const int max_edges = n * (n - 1) / 2;
    const int m = rng.uniform(n - 1, max_edges);
    return random_graph(n, m, rng.raw());
}

std::string describe(const Graph& g) {
    return "graph " + graph_hash(g) + " (n=" + std::to_string(g.vertex_count()) +
           ", m=" + std::to_string(g.edge_count()) + ")";
}

// Betweenness by literal enumeration of every shortest path: for each
// ordered pair (s,t), walk the BFS-distance DAG from s collecting all
// geodesics to t, and credit each interior vertex with (paths through it) /
// (total paths) as an exact rational. Shares no machinery with the
// accumulation algorithm it cross-checks.
std::vector<Rat> enumeration_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    const auto& adj = g.adjacency();
    std::vector<Rat> score(n, Rat(0));
    std::vector<int> dist(n);
    std::vector<int> queue(n);

    std::vector<long long> through(n);
    std::vector<int> path;
    long long total = 0;

    // DFS along strictly distance-increasing edges, rooted at the current
    // path tail, terminating at the target.
    const auto walk = [&](auto&& self, int cur, int target) -> void {
        if (cur == target) {
            ++total;
            for (size_t i = 1; i + 1 < path.size(); ++i) {
                ++through[path[i]];
            }
            return;
        }
        for (const int w : adj[cur]) {
            if (dist[w] == dist[cur] + 1 && dist[w] <= dist[target]) {
                path.push_back(w);
                self(self, w, target);
                path.pop_back();
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0;
        int tail = 0;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int v = queue[head++];
            for (const int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        for (int t = 0; t < n; ++t) {
            if (t == s || dist[t] < 0) continue;
            total = 0;
            std::fill(through.begin(), through.end(), 0);
            path.assign(1, s);
            walk(walk, s, t);
            for (int v = 0; v < n; ++v) {
                if (through[v] > 0) {
                    score[v] += Rat(through[v]) / Rat(total);
                }
            }
        }
    }
    return score;
}

SuiteResult suite_core_bounds(const VerifyConfig& cfg) {
    Recorder rec("core_bounds");
    // Attainment of the entropy bound on complete graphs.
    for (int n = 3; n <= 50; ++n) {
        std::vector<Graph::Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        }
        const Graph kn(n, std::move(edges));
        const double h = von_neumann_entropy(density_matrix(kn));
        rec.check(std::fabs(h - std::log(n - 1.0)) <= 1e-9, [&] {
            return "complete graph n=" + std::to_string(n) + ": H=" + format_sig(h) +
                   " vs ln(n-1)=" + format_sig(std::log(n - 1.0));
        });
    }

    std::vector<Graph> graphs;
    for (const CatalogId id : catalog_ids()) graphs.push_back(catalog_graph(id));
    Rng rng(cfg.seed + 1);
    const int n_hi = std::max(3, cfg.n_max);
    for (int t = 0; t < cfg.trials; ++t) graphs.push_back(sample_connected_graph(rng, 3, n_hi));

    const std::vector<double> k_grid = default_k_grid();
    for (const Graph& g : graphs) {
        const int n = g.vertex_count();
        const double h = von_neumann_entropy(density_matrix(g));
        rec.check(h <= std::log(n - 1.0) + 1e-9, [&] {
            return describe(g) + ": H=" + format_sig(h) + " exceeds ln(n-1)=" +
                   format_sig(std::log(n - 1.0));
        });

        const double t_d1 = degree_theil(g, 1.0);
        const double t_q = von_neumann_theil(g);
        rec.check(t_d1 <= t_q + 1e-9, [&] {
            return describe(g) + ": T_d1=" + format_sig(t_d1) + " exceeds T_Q=" + format_sig(t_q);
        });

        const DichotomyVerdict verdict = classify_dichotomy(g);
        if (verdict.case_label != CaseLabel::A) {
            // Statement B: the whole degree-Theil family stays below T_Q.
            for (const double k : k_grid) {
                const double t_dk = degree_theil(g, k);
                rec.check(t_dk <= t_q + 1e-9, [&] {
                    return describe(g) + ": case B but T_d," + format_sig(k) + "=" +
                           format_sig(t_dk) + " exceeds T_Q=" + format_sig(t_q);
                });
            }
        }
        // Degree-only sufficient condition implies the crossing side.
        if (verdict.sufficient_condition_holds) {
            rec.check(verdict.case_label != CaseLabel::B, [&] {
                return describe(g) + ": sufficient condition holds but classified case B";
            });
        }
        // The entropy-form restatement (H vs ln|M|) must agree with the
        // threshold-form verdict: ln n - ln|M| >= T_Q iff H >= ln|M|.
        const double ln_mult = std::log(static_cast<double>(max_degree_set(degrees(g)).multiplicity));
        CaseLabel h_form = CaseLabel::boundary;
        if (h > ln_mult + 1e-9) h_form = CaseLabel::A;
        else if (h < ln_mult - 1e-9) h_form = CaseLabel::B;
        rec.check(h_form == verdict.case_label, [&] {
            return describe(g) + ": entropy-form and threshold-form verdicts disagree";
        });
    }
    return rec.result;
}

SuiteResult suite_monotonicity(const VerifyConfig& cfg) {
    Recorder rec("monotonicity");
    std::vector<Graph> graphs;
    for (const CatalogId id : catalog_ids()) graphs.push_back(catalog_graph(id));
    Rng rng(cfg.seed + 2);
    const int n_hi = std::max(3, cfg.n_max);
    for (int t = 0; t < cfg.trials; ++t) graphs.push_back(sample_connected_graph(rng, 3, n_hi));

    const std::vector<double> k_grid = default_k_grid();
    for (const Graph& g : graphs) {
        rec.check(monotonicity_check(g, k_grid), [&] {
            return describe(g) + ": T_{d,k} decreased along the k-grid";
        });
    }
    return rec.result;
}

SuiteResult suite_limit_at_k200(const VerifyConfig&) {
    Recorder rec("limit_at_k200");
    for (const CatalogId id : catalog_ids()) {
        const Graph g = catalog_graph(id);
        const std::vector<int> d = degrees(g);
        const MaxDegreeSet m = max_degree_set(d);
        const double limit = std::log(static_cast<double>(g.vertex_count())) -
                             std::log(static_cast<double>(m.multiplicity));
        const double t_200 = degree_theil(g, 200.0);
        rec.check(std::fabs(t_200 - limit) <= 1e-4, [&] {
            return std::string(to_string(id)) + ": |T_d,200 - (ln n - ln|M|)| = " +
                   format_sig(std::fabs(t_200 - limit));
        });
        // Geometric convergence-rate bound that justifies stopping at k=200:
        // n * (d_2nd / d_max)^k dominates the tail whenever a second
        // distinct degree exists.
        const int d_max = *std::max_element(d.begin(), d.end());
        int d_2nd = 0;
        for (const int v : d) {
            if (v < d_max) d_2nd = std::max(d_2nd, v);
        }
        if (d_2nd > 0) {
            const double bound = g.vertex_count() *
                                 std::pow(static_cast<double>(d_2nd) / d_max, 200.0);
            rec.check(bound <= 1e-4, [&] {
                return std::string(to_string(id)) + ": rate bound " + format_sig(bound) +
                       " exceeds 1e-4 at k=200";
            });
        }
    }
    return rec.result;
}

SuiteResult suite_renyi2_identity(const VerifyConfig& cfg) {
    Recorder rec("renyi2_identity");
    std::vector<Graph> graphs;
    for (const CatalogId id : catalog_ids()) graphs.push_back(catalog_graph(id));
    Rng rng(cfg.seed + 3);
    const int n_hi = std::max(3, cfg.n_max);
    for (int t = 0; t < cfg.trials; ++t) graphs.push_back(sample_connected_graph(rng, 3, n_hi));

    for (const Graph& g : graphs) {
        const double h2_eigen = renyi_entropy(density_matrix(g), 2.0);
        const double h2_degree = renyi2_entropy_degree_form(degrees(g));
        rec.check(std::fabs(h2_eigen - h2_degree) <= 1e-9, [&] {
            return describe(g) + ": eigenvalue H2=" + format_sig(h2_eigen) +
                   " vs degree form " + format_sig(h2_degree);
        });
    }
    return rec.result;
}

SuiteResult suite_jain_pairing(const VerifyConfig& cfg) {
    Recorder rec("jain_pairing");
    std::vector<Graph> graphs;
    for (const CatalogId id : catalog_ids()) graphs.push_back(catalog_graph(id));
    Rng rng(cfg.seed + 4);
    const int n_hi = std::max(3, cfg.n_max);
    for (int t = 0; t < cfg.trials; ++t) graphs.push_back(sample_connected_graph(rng, 3, n_hi));

    for (const Graph& g : graphs) {
        const double t_q2 = generalized_theil(g, 2.0);
        const double bound = -std::log(jain_index(degrees(g)));
        rec.check(t_q2 >= bound - 1e-10, [&] {
            return describe(g) + ": T_Q^(2)=" + format_sig(t_q2) + " below -ln J=" +
                   format_sig(bound);
        });
    }
    return rec.result;
}

SuiteResult suite_threshold_split(const VerifyConfig& cfg) {
    Recorder rec("threshold_split");
    std::vector<std::vector<int>> vectors;
    // Deterministic extras: regular vectors (everything must land in P) and
    // vectors containing zero-degree entries (the derivative-zero convention).
    vectors.push_back({3, 3, 3, 3});
    vectors.push_back({5, 5, 5, 5, 5, 5, 5});
    vectors.push_back({0, 2, 3, 4});
    vectors.push_back({0, 0, 7, 7, 1});
    Rng rng(cfg.seed + 5);
    const int n_hi = std::max(2, cfg.n_max);
    for (int t = 0; t < cfg.trials; ++t) {
        const int n = rng.uniform(2, n_hi);
        std::vector<int> d(n);
        for (int& v : d) v = rng.uniform(1, 20);
        vectors.push_back(std::move(d));
    }

    const std::vector<double> k_values{0.5, 1.0, 2.0, 5.0};
    for (const auto& d : vectors) {
        for (const double k : k_values) {
            const NpSplit split = np_set_split(d, k);
            const auto vector_text = [&] {
                std::ostringstream out;
                out << "d=(";
                for (size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
                out << ") k=" << format_sig(k);
                return out.str();
            };
            rec.check(split.n_set.size() + split.p_set.size() == d.size(), [&] {
                return vector_text() + ": N and P do not partition the vertices";
            });
            bool zero_in_p = true;
            for (const int i : split.n_set) {
                if (d[i] == 0) zero_in_p = false;
            }
            rec.check(zero_in_p, [&] { return vector_text() + ": zero-degree vertex left P"; });
            // Zero-degree vertices contribute a constant zero term and are
            // parked in P by convention; the threshold separation property
            // concerns the active (nonzero-degree) vertices only.
            int max_n = 0;
            bool n_active = false;
            for (const int i : split.n_set) {
                max_n = std::max(max_n, d[i]);
                n_active = true;
            }
            int min_p = std::numeric_limits<int>::max();
            bool p_active = false;
            for (const int i : split.p_set) {
                if (d[i] > 0) {
                    min_p = std::min(min_p, d[i]);
                    p_active = true;
                }
            }
            if (n_active && p_active) {
                rec.check(max_n <= min_p, [&] {
                    return vector_text() + ": max over N = " + std::to_string(max_n) +
                           " exceeds min over P = " + std::to_string(min_p);
                });
            } else {
                // Single-sided split: all degrees equal forces N empty.
                rec.check(!split.p_set.empty(), [&] {
                    return vector_text() + ": P came back empty";
                });
            }
        }
    }
    return rec.result;
}

SuiteResult suite_betweenness_oracle(const VerifyConfig& cfg) {
    Recorder rec("betweenness_oracle");
    std::vector<Graph> graphs;
    for (const CatalogId id : catalog_ids()) graphs.push_back(catalog_graph(id));
    Rng rng(cfg.seed + 6);
    const int random_count = std::min(cfg.trials, 200);
    for (int t = 0; t < random_count; ++t) graphs.push_back(sample_connected_graph(rng, 3, 8));

    for (const Graph& g : graphs) {
        const std::vector<Rat> oracle = enumeration_betweenness(g);
        const std::vector<Rat> exact = betweenness_impl<Rat>(g);
        bool all_equal = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (exact[v] != oracle[v]) all_equal = false;
        }
        rec.check(all_equal, [&] {
            return describe(g) + ": rational accumulation differs from path enumeration";
        });

        const std::vector<double> approx = betweenness(g);
        double worst = 0.0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            worst = std::max(worst, std::fabs(approx[v] - oracle[v].convert_to<double>()));
        }
        rec.check(worst <= 1e-12, [&] {
            return describe(g) + ": double accumulation off by " + format_sig(worst);
        });
    }
    return rec.result;
}

} // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig& config) {
    if (config.trials < 1) {
        throw_error(errc::too_small, "verification needs trials >= 1");
    }
    std::vector<SuiteResult> suites;
    suites.push_back(suite_core_bounds(config));
    suites.push_back(suite_monotonicity(config));
    suites.push_back(suite_limit_at_k200(config));
    suites.push_back(suite_renyi2_identity(config));
    suites.push_back(suite_jain_pairing(config));
    suites.push_back(suite_threshold_split(config));
    suites.push_back(suite_betweenness_oracle(config));
    return suites;
}

} // namespace graphcent
