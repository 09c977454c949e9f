#pragma once

#include "icc/coloring.hpp"
#include "icc/generators.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace icc {

/// A graph together with one of its edge colorings.
struct ColoredGraph {
    Graph graph;
    EdgeColoring coloring;
};

/// Reduces an interval W-coloring modulo t, for Delta <= t <= W.
inline EdgeColoring mod_reduce(const Graph& g, const EdgeColoring& interval_coloring, Color t) {
    if (!validate_interval(g, interval_coloring).valid())
        throw invalid_parameter("mod_reduce needs an interval coloring");
    if (t < static_cast<Color>(g.max_degree()) || t > interval_coloring.t)
        throw invalid_parameter("mod_reduce target t outside [max degree, W]");
    EdgeColoring out{t, interval_coloring.colors};
    for (Color& c : out.colors)
        c = wrap_color(c, t);
    return out;
}

/// Interval cyclic n(d-1)-coloring of G_{d,n}; every color is used once.
inline ColoredGraph color_gdn(std::size_t d, std::size_t n) {
    Graph g = make_gdn(d, n);
    const Color step = static_cast<Color>(d - 1);
    EdgeColoring c{static_cast<Color>(n) * step, std::vector<Color>(g.edge_count(), 0)};
    auto set = [&](Vertex a, Vertex b, Color value) { c.colors[*g.edge_index(a, b)] = value; };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j + 2 <= d; ++j)
            set(i - 1, gdn_pendant(d, n, i, j), static_cast<Color>((i - 1) * (d - 1) + j));
    for (std::size_t i = 1; i < n; ++i)
        set(i - 1, i, static_cast<Color>(i) * step);
    set(0, n - 1, static_cast<Color>(n) * step);
    return {std::move(g), std::move(c)};
}

namespace detail {

/// Color of v_i v_j (i < j) in the 3n-coloring of K_{2n+1}. Rules are
/// scanned in table order; an edge hit by several rules must get the same
/// color from each of them.
inline Color complete_odd_color(long long n, long long i, long long j) {
    const long long h = n / 2;
    const long long g = (n - 1) / 2;
    struct Rule {
        bool applies;
        long long value;
    };
    const std::array<Rule, 14> rules{{
        {i == 0 && j == 1, 1},
        {i == 0 && j == 2, 2 * n + 1},
        {i == 0 && 3 <= j && j <= n, j - 1},
        {i == 0 && n + 1 <= j && j <= 2 * n - 2, n + 1 + j},
        {i == 0 && j == 2 * n - 1, n},
        {i == 0 && j == 2 * n, 3 * n},
        {1 <= i && i <= h && 2 <= j && j <= n && i + j <= n + 1, i + j - 1},
        {2 <= i && i <= n - 1 && h + 2 <= j && j <= n && i + j >= n + 2, i + j + n - 2},
        {3 <= i && i <= n && n + 1 <= j && j <= 2 * n - 2 && j - i <= n - 2, n + 1 + j - i},
        {1 <= i && i <= n && n + 1 <= j && j <= 2 * n && j - i >= n, j - i + 1},
        {2 <= i && i <= 1 + g && n + 1 <= j && j <= n + g && j - i == n - 1, 2 * i - 1},
        {g + 2 <= i && i <= n && n + 1 + g <= j && j <= 2 * n - 1 && j - i == n - 1, i + j - 1},
        {n + 1 <= i && i <= n + h - 1 && n + 2 <= j && j <= 2 * n - 2 && i + j <= 3 * n - 1,
         i + j - 2 * n + 1},
        {n + 1 <= i && i <= 2 * n - 1 && n + h + 1 <= j && j <= 2 * n && i + j >= 3 * n, i + j - n},
    }};
    std::optional<long long> chosen;
    for (const Rule& r : rules) {
        if (!r.applies)
            continue;
        if (!chosen)
            chosen = r.value;
        else if (*chosen != r.value)
            throw std::logic_error("K_{2n+1} rules disagree on edge v" + std::to_string(i) + "v" +
                                   std::to_string(j));
    }
    if (!chosen)
        throw std::logic_error("no K_{2n+1} rule covers edge v" + std::to_string(i) + "v" +
                               std::to_string(j));
    return static_cast<Color>(*chosen);
}

} // namespace detail

/// Interval cyclic 3n-coloring of K_{2n+1} on vertices v_0..v_{2n}.
inline ColoredGraph color_complete_odd(std::size_t n) {
    if (n < 1)
        throw invalid_parameter("color_complete_odd needs n >= 1");
    Graph g = make_complete(2 * n + 1);
    EdgeColoring c{static_cast<Color>(3 * n), {}};
    c.colors.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        c.colors.push_back(detail::complete_odd_color(static_cast<long long>(n),
                                                      static_cast<long long>(e.u),
                                                      static_cast<long long>(e.v)));
    return {std::move(g), std::move(c)};
}

/// Interval (m+n-1)-coloring of K_{m,n} by alpha(u_i v_j) = i + j - 1.
inline ColoredGraph canonical_bipartite_interval(std::size_t m, std::size_t n) {
    Graph g = make_complete_bipartite(m, n);
    EdgeColoring c{static_cast<Color>(m + n - 1), {}};
    for (const Edge& e : g.edges())
        c.colors.push_back(static_cast<Color>((e.u + 1) + (e.v - m + 1) - 1));
    return {std::move(g), std::move(c)};
}

/// Interval cyclic (m+n)-coloring of K_{m,n}, min(m, n) >= 2: the shifted
/// diagonal with u_1 v_n moved to color m + n.
inline ColoredGraph color_complete_bipartite_cyclic(std::size_t m, std::size_t n) {
    if (m < 2 || n < 2)
        throw invalid_parameter("cyclic K_{m,n} construction needs min(m, n) >= 2");
    auto [g, c] = canonical_bipartite_interval(m, n);
    c.t = static_cast<Color>(m + n);
    c.colors[*g.edge_index(0, m + n - 1)] = static_cast<Color>(m + n);
    return {std::move(g), std::move(c)};
}

/// Interval cyclic (l+m+n)-coloring of K_{l,m,n}. The part sizes are
/// sorted first and the graph is laid out with parts of nondecreasing size
/// (w-block, then u-block, then v-block).
inline ColoredGraph color_tripartite(std::size_t l, std::size_t m, std::size_t n) {
    std::array<std::size_t, 3> p{l, m, n};
    std::sort(p.begin(), p.end());
    std::tie(l, m, n) = std::tuple{p[0], p[1], p[2]};
    Graph g = make_complete_tripartite(l, m, n);
    const auto w = [&](std::size_t i) { return i - 1; };
    const auto u = [&](std::size_t i) { return l + i - 1; };
    const auto v = [&](std::size_t j) { return l + m + j - 1; };
    const long long L = static_cast<long long>(l), M = static_cast<long long>(m),
                    N = static_cast<long long>(n);
    EdgeColoring c{static_cast<Color>(l + m + n), std::vector<Color>(g.edge_count(), 0)};
    auto set = [&](Vertex a, Vertex b, long long value) {
        c.colors[*g.edge_index(a, b)] = static_cast<Color>(value);
    };
    for (long long i = 1; i <= M; ++i)
        for (long long j = 1; j <= N; ++j)
            set(u(i), v(j), L + i + j - 1);
    for (long long i = 1; i <= L; ++i)
        for (long long j = 1; j <= N; ++j)
            set(w(i), v(j), i + j - 1);
    for (long long i = 1; i <= M; ++i)
        for (long long j = 1; j <= L; ++j)
            set(u(i), w(j), i + j <= M + 1 ? L + N + i + j - 1 : i + j - M - 1);
    return {std::move(g), std::move(c)};
}

/// Spectrum class of a vertex in the base hypercube coloring.
enum class HypercubeClass { low, high };

struct HypercubeBaseColoring {
    Graph graph;
    EdgeColoring coloring;
    /// low: spectrum [1, n]; high: spectrum [2, n+1].
    std::vector<HypercubeClass> classes;
};

/// Interval (n+1)-coloring of Q_n in which half the vertices see [1, n] and
/// the other half see [2, n+1].
///
/// Built by doubling from C_4 colored 1,2,3,2. The old cube is copied; the
/// first copy keeps its coloring, the second copy colors edge e with
/// (k+2) - phi(sigma(e)), where sigma flips bit 1 and swaps the two classes.
/// Matching edges get k+1 on low vertices and k+2 on high vertices. Each
/// doubling is re-validated before the next one.
inline HypercubeBaseColoring hypercube_base_interval(std::size_t n) {
    if (n < 2)
        throw invalid_parameter("hypercube base coloring needs n >= 2");
    using C = HypercubeClass;
    HypercubeBaseColoring cur{make_hypercube(2), {3, {1, 2, 2, 3}}, {C::low, C::low, C::high, C::high}};
    for (std::size_t k = 2; k < n; ++k) {
        Graph next = make_hypercube(k + 1);
        const Vertex half = Vertex{1} << k;
        const Color top = static_cast<Color>(k + 2);
        EdgeColoring c{static_cast<Color>(k + 2), {}};
        c.colors.reserve(next.edge_count());
        for (const Edge& e : next.edges()) {
            if ((e.u ^ e.v) == half) {
                c.colors.push_back(cur.classes[e.u] == C::low ? static_cast<Color>(k + 1) : top);
            } else if (e.u < half) {
                c.colors.push_back(cur.coloring.colors[*cur.graph.edge_index(e.u, e.v)]);
            } else {
                Vertex a = (e.u - half) ^ 2U, b = (e.v - half) ^ 2U;
                c.colors.push_back(top - cur.coloring.colors[*cur.graph.edge_index(a, b)]);
            }
        }
        std::vector<C> classes(next.vertex_count());
        for (Vertex x = 0; x < next.vertex_count(); ++x)
            classes[x] = cur.classes[x & (half - 1)];
        cur = {std::move(next), std::move(c), std::move(classes)};

        if (!validate_interval(cur.graph, cur.coloring).valid())
            throw std::logic_error("hypercube doubling produced an invalid coloring at n=" +
                                   std::to_string(k + 1));
        for (Vertex x = 0; x < cur.graph.vertex_count(); ++x) {
            auto s = spectrum(cur.graph, cur.coloring, x);
            Color lo = cur.classes[x] == C::low ? 1 : 2;
            if (s.front() != lo || s.back() != lo + static_cast<Color>(k))
                throw std::logic_error("hypercube doubling broke the class of vertex " +
                                       std::to_string(x));
        }
    }
    return cur;
}

namespace detail {

/// Interval cyclic 8-coloring of Q_3 in canonical edge order, found by
/// exhaustive search and frozen here.
inline constexpr std::array<Color, 12> q3_cyclic_8 = {1, 2, 3, 8, 7, 1, 3, 7, 5, 4, 6, 5};

} // namespace detail

/// Interval cyclic (4n-4)-coloring of Q_n.
///
/// For n >= 4 the cube is split into quadrants Q^{(i,j)} by (bit 0, bit 1).
/// The base coloring phi of Q_{n-2} colors Q^{(0,0)} and is shifted by n-1,
/// 2n-2 and 3n-3 on Q^{(0,1)}, Q^{(1,1)} and Q^{(1,0)}; the edges between
/// quadrants take the color that extends each endpoint's spectrum by one.
inline ColoredGraph color_hypercube_cyclic(std::size_t n) {
    if (n < 2)
        throw invalid_parameter("cyclic hypercube construction needs n >= 2");
    if (n == 2)
        return {make_hypercube(2), {4, {1, 4, 2, 3}}};
    if (n == 3)
        return {make_hypercube(3), {8, {detail::q3_cyclic_8.begin(), detail::q3_cyclic_8.end()}}};

    const auto base = hypercube_base_interval(n - 2);
    Graph g = make_hypercube(n);
    const Color N = static_cast<Color>(n);
    EdgeColoring c{4 * N - 4, {}};
    c.colors.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const Vertex tail_u = e.u >> 2, tail_v = e.v >> 2;
        const unsigned i = e.u & 1U, j = (e.u >> 1) & 1U;
        const bool low = base.classes[tail_u] == HypercubeClass::low;
        const Vertex flip = e.u ^ e.v;
        if (flip >= 4) {
            Color phi = base.coloring.colors[*base.graph.edge_index(tail_u, tail_v)];
            Color shift = 0;
            if (i == 0 && j == 1)
                shift = N - 1;
            else if (i == 1 && j == 1)
                shift = 2 * N - 2;
            else if (i == 1 && j == 0)
                shift = 3 * N - 3;
            c.colors.push_back(phi + shift);
        } else if (flip == 2) {
            // (0,0)-(0,1) when bit 0 is clear, (1,1)-(1,0) otherwise
            if (i == 0)
                c.colors.push_back(low ? N - 1 : N);
            else
                c.colors.push_back(low ? 3 * N - 3 : 3 * N - 2);
        } else {
            // (0,1)-(1,1) when bit 1 is set, (1,0)-(0,0) otherwise
            if (j == 1)
                c.colors.push_back(low ? 2 * N - 2 : 2 * N - 1);
            else
                c.colors.push_back(low ? 4 * N - 4 : 1);
        }
    }
    return {std::move(g), std::move(c)};
}

/// A named construction with positional parameters, as used by the CLI.
struct ConstructionRequest {
    std::string family;
    std::vector<std::size_t> params;
};

inline ColoredGraph build(const ConstructionRequest& req) {
    const auto& p = req.params;
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw invalid_parameter("construction '" + req.family + "' takes " +
                                    std::to_string(count) + " parameter(s)");
    };
    if (req.family == "gdn") {
        need(2);
        return color_gdn(p[0], p[1]);
    }
    if (req.family == "complete-odd") {
        need(1);
        return color_complete_odd(p[0]);
    }
    if (req.family == "bipartite-cyclic") {
        need(2);
        return color_complete_bipartite_cyclic(p[0], p[1]);
    }
    if (req.family == "bipartite-interval") {
        need(2);
        return canonical_bipartite_interval(p[0], p[1]);
    }
    if (req.family == "tripartite") {
        need(3);
        return color_tripartite(p[0], p[1], p[2]);
    }
    if (req.family == "hypercube-base") {
        need(1);
        auto b = hypercube_base_interval(p[0]);
        return {std::move(b.graph), std::move(b.coloring)};
    }
    if (req.family == "hypercube-cyclic") {
        need(1);
        return color_hypercube_cyclic(p[0]);
    }
    throw invalid_parameter("unknown construction '" + req.family + "'");
}

inline const std::vector<std::string_view>& construction_names() {
    static const std::vector<std::string_view> names{
        "gdn", "complete-odd", "bipartite-cyclic", "bipartite-interval",
        "tripartite", "hypercube-base", "hypercube-cyclic"};
    return names;
}

} // namespace icc
