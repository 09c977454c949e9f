#pragma once

#include "icc/graph.hpp"

#include <string>
#include <vector>

namespace icc {

inline Graph make_cycle(std::size_t n) {
    if (n < 3)
        throw invalid_parameter("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

inline Graph make_path(std::size_t m) {
    if (m < 2)
        throw invalid_parameter("path needs at least 2 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < m; ++i)
        edges.push_back({i, i + 1});
    return Graph(m, std::move(edges));
}

inline Graph make_complete(std::size_t n) {
    if (n < 1)
        throw invalid_parameter("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

/// K_{m,n}: u_1..u_m are vertices 0..m-1, v_1..v_n are m..m+n-1.
inline Graph make_complete_bipartite(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1)
        throw invalid_parameter("complete bipartite parts must be nonempty");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = 0; j < n; ++j)
            edges.push_back({i, m + j});
    return Graph(m + n, std::move(edges));
}

inline Graph make_star(std::size_t k) { return make_complete_bipartite(1, k); }

/// K_{l,m,n}: parts occupy consecutive index blocks of sizes l, m, n.
inline Graph make_complete_tripartite(std::size_t l, std::size_t m, std::size_t n) {
    if (l < 1 || m < 1 || n < 1)
        throw invalid_parameter("complete tripartite parts must be nonempty");
    const std::size_t sizes[3] = {l, m, n};
    const std::size_t starts[3] = {0, l, l + m};
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (std::size_t i = 0; i < sizes[a]; ++i)
                for (std::size_t j = 0; j < sizes[b]; ++j)
                    edges.push_back({starts[a] + i, starts[b] + j});
    return Graph(l + m + n, std::move(edges));
}

/// Q_n on vertices 0..2^n-1; vertex x is labeled by its bits in
/// little-endian order (bit 0 first), and adjacency is a single bit flip.
inline Graph make_hypercube(std::size_t n) {
    if (n < 1)
        throw invalid_parameter("hypercube dimension must be at least 1");
    if (n > 20)
        throw invalid_parameter("hypercube dimension too large");
    const std::size_t count = std::size_t{1} << n;
    std::vector<Edge> edges;
    std::vector<std::string> labels(count);
    for (Vertex x = 0; x < count; ++x) {
        for (std::size_t bit = 0; bit < n; ++bit) {
            labels[x].push_back(((x >> bit) & 1U) ? '1' : '0');
            Vertex y = x ^ (std::size_t{1} << bit);
            if (x < y)
                edges.push_back({x, y});
        }
    }
    return Graph(count, std::move(edges), std::move(labels));
}

/// Index of pendant u^{(i)}_j in G_{d,n} (i, j are 1-based).
inline Vertex gdn_pendant(std::size_t d, std::size_t n, std::size_t i, std::size_t j) {
    return n + (i - 1) * (d - 2) + (j - 1);
}

/// Cycle v_1..v_n (vertices 0..n-1) with d-2 pendants on every cycle
/// vertex; pendants follow, grouped by their cycle vertex.
inline Graph make_gdn(std::size_t d, std::size_t n) {
    if (d < 2 || n < 3)
        throw invalid_parameter("G_{d,n} needs d >= 2 and n >= 3");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("v" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j + 2 <= d; ++j) {
            edges.push_back({i - 1, gdn_pendant(d, n, i, j)});
            labels.push_back("u" + std::to_string(i) + "_" + std::to_string(j));
        }
    return Graph(n + n * (d - 2), std::move(edges), std::move(labels));
}

/// T plus a new vertex (index |V(T)|) joined to every leaf of T.
inline Graph make_tree_hat(const Graph& tree) {
    if (!is_tree(tree) || tree.vertex_count() < 2)
        throw not_a_tree("tree hat needs a tree with at least 2 vertices");
    const Vertex apex = tree.vertex_count();
    std::vector<Edge> edges = tree.edges();
    for (Vertex leaf : leaves(tree))
        edges.push_back({leaf, apex});
    return Graph(tree.vertex_count() + 1, std::move(edges));
}

/// K_{2n+1}^{*m}: v_1..v_{2n+1} are 0..2n, the hub u is 2n+1 and
/// w_1..w_m follow.
inline Graph make_kstar(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1)
        throw invalid_parameter("K_{2n+1}^{*m} needs n >= 1 and m >= 1");
    const std::size_t core = 2 * n + 1;
    Graph base = make_complete(core);
    std::vector<Edge> edges = base.edges();
    const Vertex hub = core;
    edges.push_back({0, hub});
    for (std::size_t i = 0; i < m; ++i)
        edges.push_back({hub, hub + 1 + i});
    return Graph(core + 1 + m, std::move(edges));
}

/// Center 0 joined to `hubs` hub vertices (1..hubs), each carrying
/// `leaves_per_hub` pendant leaves listed hub by hub.
inline Graph make_hub_tree(std::size_t hubs, std::size_t leaves_per_hub) {
    if (hubs < 1)
        throw invalid_parameter("hub tree needs at least one hub");
    std::vector<Edge> edges;
    for (std::size_t h = 1; h <= hubs; ++h)
        edges.push_back({0, h});
    Vertex next = hubs + 1;
    for (std::size_t h = 1; h <= hubs; ++h)
        for (std::size_t s = 0; s < leaves_per_hub; ++s)
            edges.push_back({h, next++});
    return Graph(next, std::move(edges));
}

/// Two adjacent centers 0 and 1 with a and b leaves respectively.
inline Graph make_double_star(std::size_t a, std::size_t b) {
    std::vector<Edge> edges{{0, 1}};
    Vertex next = 2;
    for (std::size_t i = 0; i < a; ++i)
        edges.push_back({0, next++});
    for (std::size_t i = 0; i < b; ++i)
        edges.push_back({1, next++});
    return Graph(next, std::move(edges));
}

/// A 4-cycle and a triangle sharing vertex 0.
inline Graph make_fish() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5}, {4, 5}});
}

inline Graph make_petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, std::move(edges));
}

} // namespace icc
