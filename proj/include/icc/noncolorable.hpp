#pragma once

#include "icc/bounds.hpp"
#include "icc/generators.hpp"
#include "icc/metrics.hpp"
#include "icc/solver.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icc {

enum class CertificateRule { tree_hat, kstar, kstar_511, exhaustive_search };

inline std::string_view to_string(CertificateRule r) {
    switch (r) {
    case CertificateRule::tree_hat: return "tree-hat";
    case CertificateRule::kstar: return "kstar";
    case CertificateRule::kstar_511: return "kstar-511";
    case CertificateRule::exhaustive_search: return "exhaustive-search";
    }
    return "unknown";
}

struct CertificatePremise {
    std::string name;
    long long value = 0;
    std::string condition;
    bool pass = false;
};

/// Record of why a graph has no interval cyclic coloring: either an
/// analytic rule with all of its premises recomputed from the graph, or a
/// per-t search transcript covering the whole admissible range.
struct Certificate {
    CertificateRule rule = CertificateRule::exhaustive_search;
    std::vector<CertificatePremise> premises;
    std::vector<SolveOutcome> transcript;
    std::vector<std::string> notes;
    bool inconclusive = false;

    bool premises_pass() const {
        return std::all_of(premises.begin(), premises.end(),
                           [](const CertificatePremise& p) { return p.pass; });
    }

    /// True when the certificate establishes non-colorability.
    bool conclusive() const {
        if (inconclusive || !premises_pass())
            return false;
        if (rule != CertificateRule::exhaustive_search)
            return true;
        return std::all_of(transcript.begin(), transcript.end(),
                           [](const SolveOutcome& o) { return o.decision == Decision::infeasible; });
    }

    std::optional<std::string> conclusion() const {
        if (!conclusive())
            return std::nullopt;
        return std::string("not interval cyclically colorable");
    }
};

struct CertifiedGraph {
    Graph graph;
    Certificate certificate;

    bool accepted() const { return certificate.conclusive(); }
};

namespace detail {

inline CertificatePremise premise(std::string name, long long value, std::string condition, bool pass) {
    return {std::move(name), value, std::move(condition), pass};
}

} // namespace detail

/// Checks the tree-hat shape around `apex` and recomputes every premise:
/// g - apex is a tree, apex is adjacent exactly to its leaves, and
/// |L(T)| >= 2 (M(T) + 2). Returns nullopt when the shape does not match.
inline std::optional<Certificate> verify_tree_hat(const Graph& g, Vertex apex) {
    if (apex >= g.vertex_count() || g.vertex_count() < 3)
        return std::nullopt;
    if (g.edge_count() != g.vertex_count() - 2 + g.degree(apex))
        return std::nullopt;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != apex)
            keep.push_back(v);
    const Graph tree = induced_subgraph(g, keep);
    if (!is_tree(tree))
        return std::nullopt;
    std::vector<Vertex> tree_leaves;
    for (Vertex leaf : leaves(tree))
        tree_leaves.push_back(keep[leaf]);
    std::vector<Vertex> attached;
    for (std::size_t e : g.incident(apex))
        attached.push_back(g.other(e, apex));
    std::sort(attached.begin(), attached.end());
    if (attached != tree_leaves)
        return std::nullopt;

    Certificate c;
    c.rule = CertificateRule::tree_hat;
    const auto leaf_count = static_cast<long long>(tree_leaves.size());
    const long long m = tree_m(tree);
    c.premises.push_back(detail::premise("tree_vertices", static_cast<long long>(tree.vertex_count()),
                                         "g - apex is a tree", true));
    c.premises.push_back(detail::premise("apex_degree", static_cast<long long>(g.degree(apex)),
                                         "apex adjacent to exactly the tree leaves", true));
    c.premises.push_back(detail::premise("M(T)", m, "max over pairs of path edges plus edges leaving the path", true));
    c.premises.push_back(detail::premise("leaf_count", leaf_count,
                                         ">= 2(M(T)+2) = " + std::to_string(2 * (m + 2)),
                                         leaf_count >= 2 * (m + 2)));
    c.premises.push_back(detail::premise("max_degree", static_cast<long long>(g.max_degree()),
                                         "= leaf_count",
                                         static_cast<long long>(g.max_degree()) == leaf_count));

    bool even = true;
    for (std::size_t i = 0; i < tree_leaves.size() && even; ++i) {
        const auto dist = bfs_distances(tree, tree_leaves[i] > apex ? tree_leaves[i] - 1 : tree_leaves[i]);
        for (std::size_t j = i + 1; j < tree_leaves.size(); ++j) {
            Vertex lj = tree_leaves[j] > apex ? tree_leaves[j] - 1 : tree_leaves[j];
            if (dist[lj] % 2 != 0) {
                even = false;
                break;
            }
        }
    }
    if (even) {
        c.notes.push_back("all leaf-to-leaf distances are even; the graph is bipartite (" +
                          std::string(two_coloring(g) ? "verified" : "NOT verified") + ")");
    }
    return c;
}

/// Locates a hub u with a single non-pendant neighbor v1 and m pendant
/// neighbors, where the rest of the graph is a complete graph K_{2n+1}
/// containing v1. Premises for both kstar rules are recomputed.
inline std::optional<Certificate> verify_kstar(const Graph& g) {
    const auto m_all = metrics(g);
    for (Vertex hub = 0; hub < g.vertex_count(); ++hub) {
        std::vector<Vertex> pendants;
        std::vector<Vertex> inner;
        for (std::size_t e : g.incident(hub)) {
            Vertex y = g.other(e, hub);
            (g.degree(y) == 1 ? pendants : inner).push_back(y);
        }
        if (inner.size() != 1 || pendants.empty())
            continue;
        const Vertex anchor = inner.front();
        std::vector<Vertex> core;
        std::vector<bool> outside(g.vertex_count(), false);
        outside[hub] = true;
        for (Vertex p : pendants)
            outside[p] = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!outside[v])
                core.push_back(v);
        const Graph k = induced_subgraph(g, core);
        const std::size_t core_size = core.size();
        if (core_size < 3 || core_size % 2 == 0 || !is_complete(k))
            continue;
        // only the anchor may leave the core, and only to the hub
        if (k.edge_count() + 1 + pendants.size() != g.edge_count())
            continue;

        const auto n = static_cast<long long>((core_size - 1) / 2);
        const auto m = static_cast<long long>(pendants.size());
        Certificate c;
        const bool special = n == 2 && m == 11;
        c.rule = (n >= 2 && m >= 6 * n) || !special ? CertificateRule::kstar : CertificateRule::kstar_511;
        c.premises.push_back(detail::premise("core_order", static_cast<long long>(core_size),
                                             "core is complete of odd order 2n+1", true));
        c.premises.push_back(detail::premise("hub_attachment", static_cast<long long>(anchor),
                                             "hub joined to one core vertex", true));
        c.premises.push_back(detail::premise("max_degree", static_cast<long long>(m_all.max_degree),
                                             "= max(m+1, 2n+1)",
                                             static_cast<long long>(m_all.max_degree) ==
                                                 std::max(m + 1, 2 * n + 1)));
        if (c.rule == CertificateRule::kstar) {
            c.premises.push_back(detail::premise("n", n, ">= 2", n >= 2));
            c.premises.push_back(detail::premise("m", m, ">= 6n = " + std::to_string(6 * n), m >= 6 * n));
        } else {
            c.premises.push_back(detail::premise("n", n, "= 2", n == 2));
            c.premises.push_back(detail::premise("m", m, "= 11", m == 11));
            c.premises.push_back(detail::premise("core_plus_hub_edges",
                                                 static_cast<long long>(k.edge_count() + 1),
                                                 "< max degree (= 12)",
                                                 static_cast<long long>(k.edge_count() + 1) <
                                                     static_cast<long long>(m_all.max_degree)));
        }
        c.notes.push_back("core plus hub is K_{2n+1} with a pendant vertex, which has no interval coloring");
        return c;
    }
    return std::nullopt;
}

/// Builds T~ for a tree T and certifies it when |L(T)| >= 2(M(T)+2).
/// A failed premise is a rejection, not a claim that T~ is colorable.
inline CertifiedGraph build_certified_tree_hat(const Graph& tree) {
    Graph hat = make_tree_hat(tree);
    auto cert = verify_tree_hat(hat, tree.vertex_count());
    if (!cert)
        throw std::logic_error("tree hat construction did not match its own shape");
    return {std::move(hat), std::move(*cert)};
}

/// Builds K_{2n+1}^{*m}; certified for n >= 2, m >= 6n and for (2, 11).
inline CertifiedGraph build_certified_kstar(std::size_t n, std::size_t m) {
    Graph g = make_kstar(n, m);
    auto cert = verify_kstar(g);
    if (!cert)
        throw std::logic_error("kstar construction did not match its own shape");
    return {std::move(g), std::move(*cert)};
}

/// Connected non-colorable graph with maximum degree d >= 12.
inline CertifiedGraph noncolorable_for_degree(std::size_t d) {
    if (d < 4)
        throw invalid_parameter("every connected graph with maximum degree at most 3 is colorable");
    if (d < 12)
        throw invalid_parameter("no certified construction for maximum degree " + std::to_string(d) +
                                "; existence for 4 <= d <= 11 is open");
    auto out = build_certified_kstar(2, d - 1);
    if (out.graph.max_degree() != d)
        throw std::logic_error("kstar degree mismatch");
    return out;
}

struct CertifyResult {
    std::optional<EdgeColoring> witness;
    Certificate certificate;

    bool noncolorable() const { return !witness && certificate.conclusive(); }
};

/// Either a witness coloring or a certificate of non-colorability. Analytic
/// rules are tried first; otherwise every t in [Delta, best bound] is
/// searched, stopping at the first feasible t.
inline CertifyResult certify_noncolorable(const Graph& g, const SolverOptions& opts = {}) {
    CertifyResult out;
    if (auto c = verify_kstar(g); c && c->conclusive()) {
        out.certificate = std::move(*c);
        return out;
    }
    for (Vertex apex = 0; apex < g.vertex_count(); ++apex) {
        if (auto c = verify_tree_hat(g, apex); c && c->conclusive()) {
            out.certificate = std::move(*c);
            return out;
        }
    }

    Certificate& c = out.certificate;
    c.rule = CertificateRule::exhaustive_search;
    const auto bounds = report(g);
    const auto lo = static_cast<long long>(std::max<std::size_t>(1, g.max_degree()));
    const long long hi = bounds.best_upper;
    c.premises.push_back(detail::premise("t_low", lo, "no t below max degree", true));
    c.premises.push_back(detail::premise("t_high", hi, "no t above the best closed-form bound", true));
    for (long long t = lo; t <= hi; ++t) {
        if (excluded(bounds.excluded_t, t)) {
            SolveOutcome skip;
            skip.t = static_cast<Color>(t);
            skip.decision = Decision::infeasible;
            skip.reason = "parity obstruction";
            c.transcript.push_back(std::move(skip));
            continue;
        }
        auto o = decide(g, static_cast<Color>(t), opts);
        if (o.decision == Decision::feasible) {
            out.witness = o.witness;
            c.transcript.push_back(std::move(o));
            return out;
        }
        if (o.decision == Decision::timeout)
            c.inconclusive = true;
        c.transcript.push_back(std::move(o));
    }
    return out;
}

} // namespace icc
