#include "graphcent/catalog.hpp"

#include <utility>

namespace graphcent {

namespace {

using Edges = std::vector<Graph::Edge>;

// Fixed labelings. Each construction is spelled out so serialized output is
// reproducible vertex-for-vertex.

// Hub 0 adjacent to leaves 1..6.
Edges star_edges() {
    Edges e;
    for (int i = 1; i < 7; ++i) e.emplace_back(0, i);
    return e;
}

// Rim cycle 0-1-2-3-4-5-0, hub 6 adjacent to every rim vertex.
Edges wheel_edges() {
    Edges e;
    for (int i = 0; i < 6; ++i) {
        e.emplace_back(i, (i + 1) % 6);
        e.emplace_back(6, i);
    }
    return e;
}

// Complete binary tree of depth 2: root 0, children 1,2, leaves 3..6.
Edges balanced_tree_edges() {
    return {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
}

// Triangle 0,1,2 with a pendant path 2-3-4-5-6 hanging off vertex 2.
Edges lollipop_edges() {
    return {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
}

// Triangles 0,1,2 and 4,5,6 joined through bridge vertex 3 (edges 2-3, 3-4).
Edges barbell_edges() {
    return {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}};
}

// Complete bipartite K_{3,4} with parts {0,1,2} and {3,4,5,6}.
Edges bipartite_3_4_edges() {
    Edges e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 7; ++j) e.emplace_back(i, j);
    return e;
}

// Ladder with rungs (0,1),(2,3),(4,5) and rails 0-2-4, 1-3-5 (the two
// stacked stories), plus roof apex 6 adjacent to the top rung 4,5.
Edges two_story_house_edges() {
    return {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}};
}

// Path 0-1-2-3-4-5-6.
Edges path_edges() {
    Edges e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, i + 1);
    return e;
}

// Cycle 0-1-2-3-4-5-6-0.
Edges circle_edges() {
    Edges e;
    for (int i = 0; i < 7; ++i) e.emplace_back(i, (i + 1) % 7);
    return e;
}

// K7.
Edges complete_edges() {
    Edges e;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) e.emplace_back(i, j);
    return e;
}

struct CatalogEntry {
    CatalogId id;
    std::string_view name;
    Edges (*edges)();
};

constexpr int kCatalogSize = 10;

const CatalogEntry kCatalog[kCatalogSize] = {
    {CatalogId::star, "star", star_edges},
    {CatalogId::wheel, "wheel", wheel_edges},
    {CatalogId::balanced_tree, "balanced_tree", balanced_tree_edges},
    {CatalogId::lollipop, "lollipop", lollipop_edges},
    {CatalogId::barbell, "barbell", barbell_edges},
    {CatalogId::bipartite_3_4, "bipartite_3_4", bipartite_3_4_edges},
    {CatalogId::two_story_house, "two_story_house", two_story_house_edges},
    {CatalogId::path, "path", path_edges},
    {CatalogId::circle, "circle", circle_edges},
    {CatalogId::complete, "complete", complete_edges},
};

} // namespace

const std::array<CatalogId, 10>& catalog_ids() noexcept {
    static const std::array<CatalogId, 10> ids = [] {
        std::array<CatalogId, 10> out{};
        for (int i = 0; i < kCatalogSize; ++i) out[i] = kCatalog[i].id;
        return out;
    }();
    return ids;
}

std::string_view to_string(CatalogId id) noexcept {
    for (const auto& entry : kCatalog) {
        if (entry.id == id) return entry.name;
    }
    return "?";
}

std::optional<CatalogId> catalog_from_string(std::string_view name) noexcept {
    for (const auto& entry : kCatalog) {
        if (entry.name == name) return entry.id;
    }
    return std::nullopt;
}

Graph catalog_graph(CatalogId id) {
    for (const auto& entry : kCatalog) {
        if (entry.id == id) return Graph(7, entry.edges());
    }
    throw_error(errc::vertex_out_of_range, "unknown catalog id");
}

} // namespace graphcent
