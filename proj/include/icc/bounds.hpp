#pragma once

#include "icc/coloring.hpp"
#include "icc/graph.hpp"
#include "icc/metrics.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icc {

// Closed-form bounds on the largest t admitting an interval cyclic
// t-coloring (W_c), plus obstructions and exact feasible sets for cycles
// and trees. Every upper bound assumes the graph is colorable at all; for
// non-colorable graphs the values are vacuous.

inline std::optional<long long> bound_triangle_free(const Graph& g) {
    if (g.vertex_count() < 2 || !is_connected(g) || has_triangle(g))
        return std::nullopt;
    return static_cast<long long>(g.vertex_count() + g.max_degree()) - 2;
}

inline std::optional<long long> bound_general(const Graph& g) {
    if (g.vertex_count() < 2 || !is_connected(g))
        return std::nullopt;
    const auto base = static_cast<long long>(2 * g.vertex_count() + g.max_degree());
    return g.vertex_count() == 2 ? base - 4 : base - 5;
}

/// Largest sum of (deg - 1) over the vertices of any shortest path, taken
/// over every ordered pair and every shortest path between them. Returns
/// nullopt for disconnected graphs or graphs with fewer than two vertices.
inline std::optional<long long> max_shortest_path_weight(const Graph& g) {
    if (g.vertex_count() < 2 || !is_connected(g))
        return std::nullopt;
    long long best = 0;
    std::vector<long long> weight(g.vertex_count());
    std::vector<Vertex> order;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto dist = bfs_distances(g, s);
        order.resize(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
        // best path weight ending at v over the shortest-path DAG rooted at s
        for (Vertex v : order) {
            long long from = 0;
            bool has_pred = false;
            for (std::size_t e : g.incident(v)) {
                Vertex p = g.other(e, v);
                if (dist[p] + 1 == dist[v]) {
                    from = has_pred ? std::max(from, weight[p]) : weight[p];
                    has_pred = true;
                }
            }
            weight[v] = from + static_cast<long long>(g.degree(v)) - 1;
            if (v != s)
                best = std::max(best, weight[v]);
        }
    }
    return best;
}

inline std::optional<long long> bound_shortest_paths(const Graph& g) {
    auto w = max_shortest_path_weight(g);
    if (!w)
        return std::nullopt;
    return 1 + 2 * *w;
}

inline std::optional<long long> bound_bipartite_diam(const Graph& g) {
    if (g.vertex_count() < 2 || !two_coloring(g))
        return std::nullopt;
    auto diam = diameter(g);
    if (!diam)
        return std::nullopt;
    return 1 + 2 * static_cast<long long>(*diam) * (static_cast<long long>(g.max_degree()) - 1);
}

enum class ExcludedT { none, even };

inline std::string_view to_string(ExcludedT x) { return x == ExcludedT::even ? "even" : "none"; }

/// Eulerian graphs with an odd number of edges admit no even t.
inline ExcludedT parity_obstruction(const Graph& g) {
    const auto m = metrics(g);
    return (m.is_eulerian && m.edge_count % 2 == 1) ? ExcludedT::even : ExcludedT::none;
}

inline bool excluded(ExcludedT x, long long t) { return x == ExcludedT::even && t % 2 == 0; }

/// Exact feasible set of the cycle C_n.
inline std::vector<Color> cycle_feasible_set(std::size_t n) {
    if (n < 3)
        throw invalid_parameter("cycle needs at least 3 vertices");
    const auto N = static_cast<Color>(n);
    std::vector<Color> out;
    if (n % 2 == 1) {
        for (Color t = 3; t <= N; t += 2)
            out.push_back(t);
        return out;
    }
    for (Color t = 2; t <= N / 2 + 1; ++t)
        out.push_back(t);
    const Color even_from = n % 4 == 0 ? N / 2 + 2 : N / 2 + 3;
    for (Color t = even_from; t <= N; ++t)
        if (t % 2 == 0)
            out.push_back(t);
    return out;
}

namespace detail {

inline void require_tree(const Graph& t) {
    if (!is_tree(t) || t.vertex_count() < 2)
        throw not_a_tree("operation needs a tree with at least 2 vertices");
}

} // namespace detail

/// Edges of the u-v path plus the edges leaving it.
inline long long tree_lp(const Graph& tree, Vertex u, Vertex v) {
    detail::require_tree(tree);
    if (u >= tree.vertex_count() || v >= tree.vertex_count() || u == v)
        throw invalid_parameter("tree_lp needs two distinct vertices");
    const auto dist = bfs_distances(tree, u);
    // every path edge is counted twice in the degree sum
    long long degree_sum = static_cast<long long>(tree.degree(v));
    Vertex x = v;
    while (x != u) {
        for (std::size_t e : tree.incident(x)) {
            Vertex p = tree.other(e, x);
            if (dist[p] + 1 == dist[x]) {
                x = p;
                break;
            }
        }
        degree_sum += static_cast<long long>(tree.degree(x));
    }
    return degree_sum - static_cast<long long>(dist[v]);
}

/// max over vertex pairs of tree_lp.
inline long long tree_m(const Graph& tree) {
    detail::require_tree(tree);
    long long best = 0;
    const std::size_t n = tree.vertex_count();
    std::vector<long long> sum(n);
    std::vector<std::size_t> depth(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        sum[s] = static_cast<long long>(tree.degree(s));
        depth[s] = 0;
        parent[s] = s;
        stack.assign(1, s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            if (x != s)
                best = std::max(best, sum[x] - static_cast<long long>(depth[x]));
            for (std::size_t e : tree.incident(x)) {
                Vertex y = tree.other(e, x);
                if (y == parent[x])
                    continue;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                sum[y] = sum[x] + static_cast<long long>(tree.degree(y));
                stack.push_back(y);
            }
        }
    }
    return best;
}

/// Closed interval [Delta(T), M(T)] of feasible t for a tree.
inline std::pair<Color, Color> tree_feasible_set(const Graph& tree) {
    detail::require_tree(tree);
    return {static_cast<Color>(tree.max_degree()), static_cast<Color>(tree_m(tree))};
}

/// 4n - 2 - p - q for n = p * 2^q with p odd.
inline long long k2n_interval_bound(long long n) {
    if (n < 1)
        throw invalid_parameter("k2n_interval_bound needs n >= 1");
    long long p = n, q = 0;
    while (p % 2 == 0) {
        p /= 2;
        ++q;
    }
    return 4 * n - 2 - p - q;
}

struct Premise {
    std::string name;
    bool holds = false;
};

struct BoundEntry {
    std::string name;
    std::optional<long long> value;
    std::vector<Premise> premises;
};

struct BoundReport {
    /// Upper bounds on W_c; not-applicable entries have no value.
    std::vector<BoundEntry> upper;
    /// Family-specific lower bounds on W_c (only recognized families).
    std::vector<BoundEntry> lower;
    /// No t below the maximum degree can work.
    long long min_t = 0;
    ExcludedT excluded_t = ExcludedT::none;
    long long best_upper = 0;
};

/// Recognizes K_{a,b} and returns its part sizes (smaller first).
inline std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
    if (g.vertex_count() < 2 || !is_connected(g))
        return std::nullopt;
    auto side = two_coloring(g);
    if (!side)
        return std::nullopt;
    std::size_t a = static_cast<std::size_t>(std::count(side->begin(), side->end(), 0));
    std::size_t b = g.vertex_count() - a;
    if (a * b != g.edge_count())
        return std::nullopt;
    return std::pair{std::min(a, b), std::max(a, b)};
}

inline bool is_complete(const Graph& g) {
    const std::size_t n = g.vertex_count();
    return n >= 1 && g.edge_count() == n * (n - 1) / 2;
}

inline BoundReport report(const Graph& g) {
    const auto m = metrics(g);
    const bool connected = m.components == 1;
    const bool enough = g.vertex_count() >= 2;
    BoundReport r;
    r.upper.push_back({"triangle_free", bound_triangle_free(g),
                       {{"connected", connected}, {"triangle_free", m.is_triangle_free},
                        {"at_least_two_vertices", enough}}});
    r.upper.push_back({"general", bound_general(g),
                       {{"connected", connected}, {"at_least_two_vertices", enough}}});
    r.upper.push_back({"shortest_paths", bound_shortest_paths(g),
                       {{"connected", connected}, {"at_least_two_vertices", enough}}});
    r.upper.push_back({"bipartite_diameter", bound_bipartite_diam(g),
                       {{"connected", connected}, {"bipartite", m.is_bipartite},
                        {"at_least_two_vertices", enough}}});
    r.upper.push_back({"edge_count", static_cast<long long>(g.edge_count()), {}});

    r.best_upper = static_cast<long long>(g.edge_count());
    for (const auto& e : r.upper)
        if (e.value)
            r.best_upper = std::min(r.best_upper, *e.value);

    if (is_complete(g) && g.vertex_count() >= 2) {
        const auto n = static_cast<long long>(g.vertex_count());
        if (n % 2 == 1)
            r.lower.push_back({"complete_odd_construction", 3 * (n / 2), {{"complete", true}}});
        else
            r.lower.push_back({"complete_even_interval", k2n_interval_bound(n / 2), {{"complete", true}}});
    }
    if (auto parts = complete_bipartite_parts(g)) {
        auto [a, b] = *parts;
        const auto value = static_cast<long long>(a == 1 ? a + b - 1 : a + b);
        r.lower.push_back({"complete_bipartite", value,
                           {{"complete_bipartite", true}, {"min_part_at_least_two", a >= 2}}});
    }
    if (is_tree(g) && g.vertex_count() >= 2)
        r.lower.push_back({"tree_exact", tree_m(g), {{"tree", true}}});
    if (connected && g.vertex_count() >= 3 &&
        std::all_of(m.degrees.begin(), m.degrees.end(), [](std::size_t d) { return d == 2; }))
        r.lower.push_back({"cycle_exact", static_cast<long long>(g.vertex_count()), {{"cycle", true}}});

    r.min_t = static_cast<long long>(std::max<std::size_t>(1, m.max_degree));
    r.excluded_t = (m.is_eulerian && m.edge_count % 2 == 1) ? ExcludedT::even : ExcludedT::none;
    return r;
}

} // namespace icc
