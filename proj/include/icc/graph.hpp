#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icc {

/// Raised when a generator, construction or operation receives parameters
/// outside its supported range.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by tree-only operations on inputs that are not trees.
class not_a_tree : public invalid_parameter {
public:
    using invalid_parameter::invalid_parameter;
};

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// The edge list is kept in canonical form: every pair is stored with
/// u < v and the list is sorted lexicographically. The position of an edge
/// in that list is its index, and colorings are indexed the same way.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary edge list. Pairs are normalized to
    /// u < v and sorted. Self-loops, duplicates and out-of-range endpoints
    /// throw invalid_parameter.
    Graph(std::size_t vertex_count, std::vector<Edge> edges,
          std::vector<std::string> labels = {})
        : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
        for (auto& e : edges_) {
            if (e.u == e.v)
                throw invalid_parameter("self-loop at vertex " + std::to_string(e.u));
            if (e.u >= vertex_count_ || e.v >= vertex_count_)
                throw invalid_parameter("edge endpoint out of range");
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw invalid_parameter("duplicate edge");
        if (!labels_.empty() && labels_.size() != vertex_count_)
            throw invalid_parameter("label count does not match vertex count");
        build_adjacency();
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::size_t degree(Vertex v) const { return incident_.at(v).size(); }

    /// Edge indices incident to v, ordered by the neighbor index.
    const std::vector<std::size_t>& incident(Vertex v) const { return incident_.at(v); }

    Vertex other(std::size_t edge_index, Vertex v) const {
        const Edge& e = edges_[edge_index];
        return e.u == v ? e.v : e.u;
    }

    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
        if (a > b)
            std::swap(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
        if (it == edges_.end() || *it != Edge{a, b})
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (const auto& inc : incident_)
            best = std::max(best, inc.size());
        return best;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    void build_adjacency() {
        incident_.assign(vertex_count_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            incident_[edges_[i].u].push_back(i);
            incident_[edges_[i].v].push_back(i);
        }
        for (Vertex v = 0; v < vertex_count_; ++v)
            std::sort(incident_[v].begin(), incident_[v].end(),
                      [&](std::size_t a, std::size_t b) { return other(a, v) < other(b, v); });
    }

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> incident_;
};

inline constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

/// Single-source BFS distances; unreachable vertices get `unreachable`.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::size_t> dist(g.vertex_count(), unreachable);
    std::queue<Vertex> queue;
    dist.at(source) = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (std::size_t e : g.incident(x)) {
            Vertex y = g.other(e, x);
            if (dist[y] == unreachable) {
                dist[y] = dist[x] + 1;
                queue.push(y);
            }
        }
    }
    return dist;
}

inline std::size_t component_count(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        ++count;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (std::size_t e : g.incident(x)) {
                Vertex y = g.other(e, x);
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return count;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Vertices of degree one.
inline std::vector<Vertex> leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1)
            out.push_back(v);
    return out;
}

/// Proper 2-coloring by BFS, or nullopt when an odd cycle exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (std::size_t e : g.incident(x)) {
                Vertex y = g.other(e, x);
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    queue.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

/// Subgraph induced by `keep` (in the given order); vertex i of the result
/// is keep[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
    std::vector<std::size_t> position(g.vertex_count(), unreachable);
    for (std::size_t i = 0; i < keep.size(); ++i)
        position.at(keep[i]) = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (position[e.u] != unreachable && position[e.v] != unreachable)
            edges.push_back({position[e.u], position[e.v]});
    return Graph(keep.size(), std::move(edges));
}

} // namespace icc
