#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphcent/catalog.hpp"
#include "graphcent/graph.hpp"
#include "graphcent/report.hpp"

namespace graphcent {

/// The four published per-graph metrics.
enum class Metric { cd, cb, td1, tq };

std::string_view to_string(Metric m) noexcept;
std::optional<Metric> metric_from_string(std::string_view name) noexcept;

/// Result of comparing the computed catalog ranking for one metric against
/// the published sequence.
///
/// matches is true iff the published order is a valid nonincreasing
/// arrangement of the computed values: no adjacent pair may increase by
/// more than 1e-9, so tied graphs may appear in either order. On failure,
/// offending holds the first adjacent published pair whose values increase.
struct OrderingResult {
    Metric metric;
    std::vector<std::pair<CatalogId, double>> ranked; ///< computed, nonincreasing
    std::vector<CatalogId> published_order_ids;
    bool matches = false;
    std::optional<std::pair<CatalogId, CatalogId>> offending;
};

/// The published decreasing sequence for a metric.
const std::vector<CatalogId>& published_order(Metric metric);

/// Compute a metric over the whole catalog and compare with the published
/// sequence under the tie rule.
OrderingResult reproduce_ordering(Metric metric);

/// Before/after values of one metric for a single vertex removal.
/// Spectral after-values are absent when the removal leaves no edges.
struct MetricDelta {
    double before = 0.0;
    std::optional<double> after;
};

/// One vertex removal: the four metrics before/after, with the after-graph's
/// connectivity flagged. Verdicts are omitted on disconnected results (the
/// dichotomy requires connectivity).
struct PerturbationRecord {
    std::string base;    ///< catalog id or graph hash
    int removed_vertex = 0;
    int n_after = 0;
    int m_after = 0;
    bool disconnected_after = false;
    MetricDelta c_d, c_b, t_d1, t_q;
};

/// One record per vertex of g, in vertex order.
std::vector<PerturbationRecord> perturbation_study(const Graph& g, const std::string& base_id);

/// Deterministic connected random graph: a random spanning tree first
/// (each vertex beyond the first attaches to a uniformly chosen earlier
/// vertex of a shuffled order), then uniformly chosen extra non-edges up to
/// m. Not uniform over connected graphs; adequate for property suites.
/// Requires n-1 <= m <= n(n-1)/2 (errc::infeasible_edge_count) and n >= 1.
Graph random_graph(int n, int m, std::uint64_t seed);

/// Render an ordering result (ranked table plus MATCH/MISMATCH line).
std::string render_ordering(const OrderingResult& result, OutputFormat format, bool bits);

/// Render perturbation records, one row per vertex.
std::string render_perturbation(const std::vector<PerturbationRecord>& records,
                                OutputFormat format, bool bits);

} // namespace graphcent
