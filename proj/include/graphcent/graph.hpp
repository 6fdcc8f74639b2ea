#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphcent/errors.hpp"

namespace graphcent {

/// An undirected simple graph on vertices 0..n-1.
///
/// Values are immutable after construction: the edge set is validated
/// (no self-loops, no duplicates, endpoints in range), normalized to
/// (min,max) pairs and sorted, so two graphs with the same edge set compare
/// equal and serialize identically. Isolated vertices are permitted (they
/// arise from vertex removal); operations that need edges check m >= 1
/// themselves.
class Graph {
  public:
    using Edge = std::pair<int, int>;

    /// Validating constructor; prefer the build_graph free function.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges as normalized (i,j) pairs with i < j, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbor lists, each sorted ascending.
    const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Validate and construct a Graph.
///
/// Throws graph_error with code self_loop, duplicate_edge or
/// vertex_out_of_range (n <= 0 is reported as vertex_out_of_range).
Graph build_graph(int n, const std::vector<Graph::Edge>& edges);

/// Per-vertex degree vector; sums to 2m.
std::vector<int> degrees(const Graph& g);

/// Combinatorial Laplacian L = D - A as a dense symmetric matrix.
/// Rows sum to zero; trace equals 2m.
Eigen::MatrixXd laplacian(const Graph& g);

/// True iff a breadth-first traversal from vertex 0 reaches every vertex.
/// The empty traversal on n = 1 is connected; n = 0 is rejected upstream.
bool is_connected(const Graph& g);

/// Number of connected components (BFS sweep).
int component_count(const Graph& g);

/// Delete vertex v and all incident edges; remaining vertices are relabeled
/// contiguously (w > v becomes w-1). Requires n >= 2.
Graph remove_vertex(const Graph& g, int v);

} // namespace graphcent
