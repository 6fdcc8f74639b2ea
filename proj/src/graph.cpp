#include "graphcent/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace graphcent {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n <= 0) {
        throw_error(errc::vertex_out_of_range,
                    "vertex count must be positive, got " + std::to_string(n));
    }
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) {
            throw_error(errc::self_loop, "edge (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
        }
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw_error(errc::vertex_out_of_range,
                        "edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside [0," + std::to_string(n) + ")");
        }
        const Edge e{std::min(i, j), std::max(i, j)};
        if (!seen.insert(e).second) {
            throw_error(errc::duplicate_edge, "edge (" + std::to_string(e.first) +
                                                  "," + std::to_string(e.second) + ")");
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, {});
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& neighbors : adj_) {
        std::sort(neighbors.begin(), neighbors.end());
    }
}

Graph build_graph(int n, const std::vector<Graph::Edge>& edges) {
    return Graph(n, edges);
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.vertex_count(), 0);
    for (auto [i, j] : g.edges()) {
        ++d[i];
        ++d[j];
    }
    return d;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : g.edges()) {
        lap(i, i) += 1.0;
        lap(j, j) += 1.0;
        lap(i, j) -= 1.0;
        lap(j, i) -= 1.0;
    }
    return lap;
}

namespace {

// BFS from vertex 0; returns the number of vertices reached.
int bfs_reach(const Graph& g, int start, std::vector<int>& mark, int tag) {
    const auto& adj = g.adjacency();
    std::vector<int> queue;
    queue.reserve(g.vertex_count());
    queue.push_back(start);
    mark[start] = tag;
    int reached = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        ++reached;
        for (const int w : adj[v]) {
            if (mark[w] != tag) {
                mark[w] = tag;
                queue.push_back(w);
            }
        }
    }
    return reached;
}

} // namespace

bool is_connected(const Graph& g) {
    std::vector<int> mark(g.vertex_count(), 0);
    return bfs_reach(g, 0, mark, 1) == g.vertex_count();
}

int component_count(const Graph& g) {
    std::vector<int> mark(g.vertex_count(), 0);
    int components = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (mark[v] == 0) {
            ++components;
            bfs_reach(g, v, mark, 1);
        }
    }
    return components;
}

Graph remove_vertex(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) {
        throw_error(errc::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
    }
    if (n < 2) {
        throw_error(errc::too_small, "cannot remove the last vertex");
    }
    std::vector<Graph::Edge> kept;
    kept.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) {
        if (i == v || j == v) {
            continue;
        }
        kept.emplace_back(i > v ? i - 1 : i, j > v ? j - 1 : j);
    }
    return Graph(n - 1, std::move(kept));
}

} // namespace graphcent
