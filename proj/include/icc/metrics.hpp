#pragma once

#include "icc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace icc {

struct GraphMetrics {
    std::vector<std::size_t> degrees;
    std::size_t max_degree = 0;
    std::size_t components = 0;
    /// nullopt encodes an infinite diameter (disconnected graph).
    std::optional<std::size_t> diameter;
    bool is_eulerian = false;
    bool is_triangle_free = true;
    bool is_bipartite = true;
    std::size_t edge_count = 0;
};

inline bool has_triangle(const Graph& g) {
    for (const Edge& e : g.edges()) {
        const auto& a = g.incident(e.u);
        const auto& b = g.incident(e.v);
        // incident lists are sorted by neighbor index, so merge them
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            Vertex x = g.other(a[i], e.u);
            Vertex y = g.other(b[j], e.v);
            if (x == y)
                return true;
            if (x < y)
                ++i;
            else
                ++j;
        }
    }
    return false;
}

/// Diameter via all-pairs BFS, or nullopt if the graph is disconnected.
inline std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (std::size_t d : bfs_distances(g, s)) {
            if (d == unreachable)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

inline GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    m.degrees.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        m.degrees[v] = g.degree(v);
    m.max_degree = m.degrees.empty() ? 0 : *std::max_element(m.degrees.begin(), m.degrees.end());
    m.components = component_count(g);
    m.diameter = diameter(g);
    const bool all_even =
        std::all_of(m.degrees.begin(), m.degrees.end(), [](std::size_t d) { return d % 2 == 0; });
    m.is_eulerian = m.components == 1 && all_even;
    m.is_triangle_free = !has_triangle(g);
    m.is_bipartite = two_coloring(g).has_value();
    m.edge_count = g.edge_count();
    return m;
}

} // namespace icc
