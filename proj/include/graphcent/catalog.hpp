#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "graphcent/graph.hpp"

namespace graphcent {

/// The ten fixed 7-vertex benchmark graphs. Constructions and vertex
/// labelings are frozen (see catalog.cpp) so every output is deterministic.
enum class CatalogId {
    star,
    wheel,
    balanced_tree,
    lollipop,
    barbell,
    bipartite_3_4,
    two_story_house,
    path,
    circle,
    complete,
};

/// All ten ids in canonical (declaration) order.
const std::array<CatalogId, 10>& catalog_ids() noexcept;

/// Canonical name, e.g. "balanced_tree".
std::string_view to_string(CatalogId id) noexcept;

/// Parse a canonical name; empty optional if unknown.
std::optional<CatalogId> catalog_from_string(std::string_view name) noexcept;

/// The fixed 7-vertex graph for an id. Every catalog graph is connected
/// and simple.
Graph catalog_graph(CatalogId id);

} // namespace graphcent
