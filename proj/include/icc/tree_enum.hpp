#pragma once

#include "icc/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace icc {

namespace detail {

inline std::string rooted_code(const Graph& t, Vertex root, Vertex parent) {
    std::vector<std::string> children;
    for (std::size_t e : t.incident(root)) {
        Vertex c = t.other(e, root);
        if (c != parent)
            children.push_back(rooted_code(t, c, root));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children)
        out += c;
    return out + ")";
}

inline std::vector<Vertex> tree_centers(const Graph& t) {
    std::vector<std::size_t> deg(t.vertex_count());
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1)
            layer.push_back(v);
    }
    std::size_t left = t.vertex_count();
    while (left > 2) {
        left -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (std::size_t e : t.incident(v)) {
                Vertex w = t.other(e, v);
                if (--deg[w] == 1)
                    next.push_back(w);
            }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

/// Rebuilds a tree from its parenthesized code, numbering vertices in
/// preorder.
inline Graph tree_from_code(const std::string& code) {
    std::vector<Edge> edges;
    std::vector<Vertex> stack;
    Vertex next = 0;
    for (char ch : code) {
        if (ch == '(') {
            Vertex v = next++;
            if (!stack.empty())
                edges.push_back({stack.back(), v});
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return Graph(next, std::move(edges));
}

} // namespace detail

/// Isomorphism-invariant code of a tree: the smallest AHU encoding over
/// its one or two centers.
inline std::string canonical_tree_code(const Graph& t) {
    if (!is_tree(t))
        throw not_a_tree("canonical code needs a tree");
    std::string best;
    for (Vertex c : detail::tree_centers(t)) {
        auto code = detail::rooted_code(t, c, unreachable);
        if (best.empty() || code < best)
            best = code;
    }
    return best;
}

/// All pairwise non-isomorphic trees on exactly n vertices, in
/// lexicographic order of their canonical codes. Each tree is numbered in
/// preorder of its canonical rooting.
inline std::vector<Graph> all_trees(std::size_t n) {
    if (n < 1)
        throw invalid_parameter("trees need at least one vertex");
    std::set<std::string> codes{"()"};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::string> grown;
        for (const auto& code : codes) {
            const Graph t = detail::tree_from_code(code);
            for (Vertex v = 0; v < t.vertex_count(); ++v) {
                auto edges = t.edges();
                edges.push_back({v, t.vertex_count()});
                grown.insert(canonical_tree_code(Graph(t.vertex_count() + 1, std::move(edges))));
            }
        }
        codes = std::move(grown);
    }
    std::vector<Graph> out;
    for (const auto& code : codes)
        out.push_back(detail::tree_from_code(code));
    return out;
}

} // namespace icc
