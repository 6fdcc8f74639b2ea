#include "graphcent/experiments.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "graphcent/indices.hpp"

namespace graphcent {

namespace {

constexpr double kTieTol = 1e-9;

double metric_value(Metric metric, const Graph& g) {
    switch (metric) {
        case Metric::cd: return freeman_degree_centralization(g);
        case Metric::cb: return freeman_betweenness_centralization(g);
        case Metric::td1: return degree_theil(g, 1.0);
        case Metric::tq: return von_neumann_theil(g);
    }
    throw_error(errc::invalid_order, "unknown metric");
}

// Evaluate one metric, absorbing domain errors (too few vertices or no
// edges after a removal) into "value not defined".
std::optional<double> try_metric(Metric metric, const Graph& g) {
    try {
        return metric_value(metric, g);
    } catch (const graph_error& e) {
        if (e.code() == errc::too_small || e.code() == errc::empty_graph) {
            return std::nullopt;
        }
        throw;
    }
}

} // namespace

std::string_view to_string(Metric m) noexcept {
    switch (m) {
        case Metric::cd: return "cd";
        case Metric::cb: return "cb";
        case Metric::td1: return "td1";
        case Metric::tq: return "tq";
    }
    return "?";
}

std::optional<Metric> metric_from_string(std::string_view name) noexcept {
    if (name == "cd") return Metric::cd;
    if (name == "cb") return Metric::cb;
    if (name == "td1") return Metric::td1;
    if (name == "tq") return Metric::tq;
    return std::nullopt;
}

const std::vector<CatalogId>& published_order(Metric metric) {
    using C = CatalogId;
    static const std::vector<C> cd{C::star,     C::wheel,         C::balanced_tree,
                                   C::lollipop, C::barbell,       C::bipartite_3_4,
                                   C::two_story_house, C::path,   C::circle,
                                   C::complete};
    static const std::vector<C> cb{C::star,     C::barbell,       C::balanced_tree,
                                   C::wheel,    C::lollipop,      C::path,
                                   C::two_story_house, C::bipartite_3_4, C::circle,
                                   C::complete};
    static const std::vector<C> td1{C::star,    C::balanced_tree, C::wheel,
                                    C::path,    C::lollipop,      C::barbell,
                                    C::two_story_house, C::bipartite_3_4, C::circle,
                                    C::complete};
    static const std::vector<C> tq{C::star,     C::balanced_tree, C::path,
                                   C::lollipop, C::barbell,       C::circle,
                                   C::two_story_house, C::wheel,  C::bipartite_3_4,
                                   C::complete};
    switch (metric) {
        case Metric::cd: return cd;
        case Metric::cb: return cb;
        case Metric::td1: return td1;
        case Metric::tq: return tq;
    }
    return cd;
}

OrderingResult reproduce_ordering(Metric metric) {
    OrderingResult result;
    result.metric = metric;
    result.published_order_ids = published_order(metric);

    std::vector<std::pair<CatalogId, double>> values;
    for (const CatalogId id : catalog_ids()) {
        values.emplace_back(id, metric_value(metric, catalog_graph(id)));
    }
    result.ranked = values;
    // Nonincreasing by value; ties keep catalog declaration order so the
    // ranking is deterministic.
    std::stable_sort(result.ranked.begin(), result.ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    const auto value_of = [&values](CatalogId id) {
        for (const auto& [vid, v] : values) {
            if (vid == id) return v;
        }
        return 0.0; // unreachable: published orders cover exactly the catalog
    };
    result.matches = true;
    for (size_t i = 0; i + 1 < result.published_order_ids.size(); ++i) {
        const CatalogId a = result.published_order_ids[i];
        const CatalogId b = result.published_order_ids[i + 1];
        if (value_of(b) > value_of(a) + kTieTol) {
            result.matches = false;
            result.offending = std::make_pair(a, b);
            break;
        }
    }
    return result;
}

std::vector<PerturbationRecord> perturbation_study(const Graph& g, const std::string& base_id) {
    if (g.vertex_count() < 3) {
        throw_error(errc::too_small, "perturbation study needs n >= 3");
    }
    const double cd0 = freeman_degree_centralization(g);
    const double cb0 = freeman_betweenness_centralization(g);
    const double td0 = degree_theil(g, 1.0);
    const double tq0 = von_neumann_theil(g);

    std::vector<PerturbationRecord> records;
    records.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Graph h = remove_vertex(g, v);
        PerturbationRecord rec;
        rec.base = base_id;
        rec.removed_vertex = v;
        rec.n_after = h.vertex_count();
        rec.m_after = h.edge_count();
        rec.disconnected_after = !is_connected(h);
        rec.c_d = {cd0, try_metric(Metric::cd, h)};
        rec.c_b = {cb0, try_metric(Metric::cb, h)};
        rec.t_d1 = {td0, try_metric(Metric::td1, h)};
        rec.t_q = {tq0, try_metric(Metric::tq, h)};
        records.push_back(std::move(rec));
    }
    return records;
}

Graph random_graph(int n, int m, std::uint64_t seed) {
    if (n < 1) {
        throw_error(errc::vertex_out_of_range, "random graph needs n >= 1");
    }
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges) {
        throw_error(errc::infeasible_edge_count,
                    "m must lie in [n-1, n(n-1)/2] = [" + std::to_string(n - 1) + "," +
                        std::to_string(max_edges) + "], got " + std::to_string(m));
    }
    std::mt19937_64 rng(seed);
    // Explicit Fisher-Yates with modulo draws: deterministic for a fixed
    // seed independent of standard-library distribution internals.
    const auto shuffle = [&rng](std::vector<int>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[rng() % i]);
        }
    };
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle(order);

    std::vector<Graph::Edge> edges;
    edges.reserve(m);
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    const auto add = [&](int a, int b) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
        present[a][b] = present[b][a] = 1;
    };
    // Random spanning tree: attach each vertex to a uniformly chosen
    // earlier vertex of the shuffled order.
    for (int i = 1; i < n; ++i) {
        add(order[i], order[rng() % i]);
    }
    // Uniformly chosen extra non-edges up to m.
    std::vector<int> slots;
    std::vector<Graph::Edge> candidates;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!present[i][j]) {
                candidates.emplace_back(i, j);
                slots.push_back(static_cast<int>(slots.size()));
            }
        }
    }
    shuffle(slots);
    for (int e = static_cast<int>(edges.size()), next = 0; e < m; ++e, ++next) {
        const auto [i, j] = candidates[slots[next]];
        add(i, j);
    }
    return Graph(n, std::move(edges));
}

namespace {

nlohmann::ordered_json delta_json(const MetricDelta& d, bool nats_field, bool bits) {
    constexpr double kLn2 = 0.6931471805599453;
    const auto scale = [&](double v) { return nats_field && bits ? v / kLn2 : v; };
    const auto emit = [](double v) { return std::stod(format_sig(v)); };
    nlohmann::ordered_json out;
    out["before"] = emit(scale(d.before));
    if (d.after) {
        out["after"] = emit(scale(*d.after));
        out["delta"] = emit(scale(*d.after - d.before));
    } else {
        out["after"] = nullptr;
        out["delta"] = nullptr;
    }
    return out;
}

std::string delta_cell(const MetricDelta& d, bool nats_field, bool bits) {
    constexpr double kLn2 = 0.6931471805599453;
    const auto scale = [&](double v) { return nats_field && bits ? v / kLn2 : v; };
    std::string out = format_sig(scale(d.before));
    out += " -> ";
    out += d.after ? format_sig(scale(*d.after)) : "n/a";
    return out;
}

} // namespace

std::string render_ordering(const OrderingResult& r, OutputFormat format, bool bits) {
    const bool nats_metric = r.metric == Metric::td1 || r.metric == Metric::tq;
    constexpr double kLn2 = 0.6931471805599453;
    const auto scale = [&](double v) { return nats_metric && bits ? v / kLn2 : v; };

    if (format == OutputFormat::json) {
        nlohmann::ordered_json out;
        out["metric"] = std::string(to_string(r.metric));
        out["units"] = nats_metric ? (bits ? "bits" : "nats") : "dimensionless";
        auto& ranked = out["ranked"] = nlohmann::ordered_json::array();
        for (const auto& [id, v] : r.ranked) {
            ranked.push_back({{"id", std::string(to_string(id))},
                              {"value", std::stod(format_sig(scale(v)))}});
        }
        auto& published = out["published_order"] = nlohmann::ordered_json::array();
        for (const CatalogId id : r.published_order_ids) {
            published.push_back(std::string(to_string(id)));
        }
        out["matches"] = r.matches;
        if (r.offending) {
            out["offending_pair"] = {std::string(to_string(r.offending->first)),
                                     std::string(to_string(r.offending->second))};
        } else {
            out["offending_pair"] = nullptr;
        }
        return out.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "metric,rank,id,value,matches\n";
        for (size_t i = 0; i < r.ranked.size(); ++i) {
            out << to_string(r.metric) << "," << (i + 1) << "," << to_string(r.ranked[i].first)
                << "," << format_sig(scale(r.ranked[i].second)) << ","
                << (r.matches ? "true" : "false") << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "| rank | graph | " << to_string(r.metric) << " |\n|---|---|---|\n";
    for (size_t i = 0; i < r.ranked.size(); ++i) {
        out << "| " << (i + 1) << " | " << to_string(r.ranked[i].first) << " | "
            << format_sig(scale(r.ranked[i].second)) << " |\n";
    }
    if (r.matches) {
        out << "\nMATCH: published order is a valid nonincreasing arrangement\n";
    } else {
        out << "\nMISMATCH: published adjacent pair increases: "
            << to_string(r.offending->first) << " < " << to_string(r.offending->second) << "\n";
    }
    return out.str();
}

std::string render_perturbation(const std::vector<PerturbationRecord>& records,
                                OutputFormat format, bool bits) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& rec : records) {
            nlohmann::ordered_json row;
            row["base"] = rec.base;
            row["removed_vertex"] = rec.removed_vertex;
            row["n_after"] = rec.n_after;
            row["m_after"] = rec.m_after;
            row["disconnected_after"] = rec.disconnected_after;
            row["c_d"] = delta_json(rec.c_d, false, bits);
            row["c_b"] = delta_json(rec.c_b, false, bits);
            row["t_d1"] = delta_json(rec.t_d1, true, bits);
            row["t_q"] = delta_json(rec.t_q, true, bits);
            out.push_back(row);
        }
        return out.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "base,removed_vertex,n_after,m_after,disconnected_after,"
               "c_d_before,c_d_after,c_b_before,c_b_after,"
               "t_d1_before,t_d1_after,t_q_before,t_q_after\n";
        constexpr double kLn2 = 0.6931471805599453;
        const auto cell = [&](const MetricDelta& d, bool nats_field) {
            const auto scale = [&](double v) { return nats_field && bits ? v / kLn2 : v; };
            std::string s = format_sig(scale(d.before));
            s += ",";
            s += d.after ? format_sig(scale(*d.after)) : "";
            return s;
        };
        for (const auto& rec : records) {
            out << rec.base << "," << rec.removed_vertex << "," << rec.n_after << ","
                << rec.m_after << "," << (rec.disconnected_after ? "true" : "false") << ","
                << cell(rec.c_d, false) << "," << cell(rec.c_b, false) << ","
                << cell(rec.t_d1, true) << "," << cell(rec.t_q, true) << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "| removed | n' | m' | disconnected | C_D | C_B | T_d1 | T_Q |\n"
        << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& rec : records) {
        out << "| " << rec.removed_vertex << " | " << rec.n_after << " | " << rec.m_after
            << " | " << (rec.disconnected_after ? "yes" : "no") << " | "
            << delta_cell(rec.c_d, false, bits) << " | " << delta_cell(rec.c_b, false, bits)
            << " | " << delta_cell(rec.t_d1, true, bits) << " | "
            << delta_cell(rec.t_q, true, bits) << " |\n";
    }
    return out.str();
}

} // namespace graphcent
