#pragma once

#include "icc/bounds.hpp"
#include "icc/coloring.hpp"
#include "icc/graph.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace icc {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct SolverOptions {
    SearchBudget budget;
    /// Restrict the first color different from 1 to the lower half of the
    /// circle (reflection symmetry). Sound for both outcomes.
    bool break_reflection = true;
    /// After each assignment, check that every uncolored edge at the two
    /// endpoints still has a usable color.
    bool forward_check = true;
};

enum class Decision { feasible, infeasible, timeout };

inline std::string_view to_string(Decision d) {
    switch (d) {
    case Decision::feasible: return "feasible";
    case Decision::infeasible: return "infeasible";
    case Decision::timeout: return "timeout";
    }
    return "unknown";
}

struct SolveOutcome {
    Color t = 0;
    Decision decision = Decision::timeout;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    /// How the decision was reached: "search" or a trivial reason.
    std::string reason;
};

/// Search order: BFS from a maximum-degree vertex, edges listed as their
/// first endpoint is dequeued. Disconnected graphs restart from the
/// highest-degree unvisited vertex.
inline std::vector<std::size_t> search_edge_order(const Graph& g) {
    std::vector<std::size_t> order;
    std::vector<bool> visited(g.vertex_count(), false), taken(g.edge_count(), false);
    std::vector<Vertex> queue;
    while (order.size() < g.edge_count()) {
        Vertex root = 0;
        bool found = false;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!visited[v] && (!found || g.degree(v) > g.degree(root))) {
                root = v;
                found = true;
            }
        visited[root] = true;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (std::size_t e : g.incident(x)) {
                if (!taken[e]) {
                    taken[e] = true;
                    order.push_back(e);
                }
                Vertex y = g.other(e, x);
                if (!visited[y]) {
                    visited[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    return order;
}

namespace detail {

/// Backtracking search for an interval cyclic t-coloring over a fixed
/// number of 64-bit words of color bitset.
///
/// Colors are 0-based internally. Each vertex keeps the set of colors used
/// at it and the set of window starts s such that [s, s+d-1] (mod t) still
/// contains every used color; a vertex with d = t only needs properness.
template <std::size_t Words>
class CyclicSearch {
public:
    using Bits = std::array<std::uint64_t, Words>;

    CyclicSearch(const Graph& g, Color t, const SolverOptions& opts)
        : g_(g), t_(t), opts_(opts), order_(search_edge_order(g)) {
        const std::size_t n = g.vertex_count();
        used_.assign(n, Bits{});
        starts_.assign(n, Bits{});
        full_.assign(n, false);
        remaining_.assign(n, 0);
        cover_.assign(g.max_degree() + 1, {});
        for (Vertex v = 0; v < n; ++v) {
            const std::size_t d = g.degree(v);
            remaining_[v] = d;
            full_[v] = d == static_cast<std::size_t>(t);
            for (Color s = 0; s < t; ++s)
                set_bit(starts_[v], s);
            if (!full_[v] && d > 0 && cover_[d].empty())
                cover_[d] = make_cover(d);
        }
        assignment_.assign(g.edge_count(), -1);
        color_count_.assign(static_cast<std::size_t>(t), 0);
    }

    SolveOutcome run() {
        const auto start = std::chrono::steady_clock::now();
        start_ = start;
        SolveOutcome out;
        out.t = t_;
        out.reason = "search";
        const bool found = expand(0, false);
        out.nodes_explored = nodes_;
        out.elapsed = std::chrono::steady_clock::now() - start;
        if (found) {
            out.decision = Decision::feasible;
            EdgeColoring w{t_, {}};
            for (int c : assignment_)
                w.colors.push_back(c + 1);
            out.witness = std::move(w);
        } else {
            out.decision = aborted_ ? Decision::timeout : Decision::infeasible;
        }
        return out;
    }

private:
    static bool test_bit(const Bits& b, Color c) {
        return (b[static_cast<std::size_t>(c) / 64] >> (static_cast<std::size_t>(c) % 64)) & 1U;
    }
    static void set_bit(Bits& b, Color c) {
        b[static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(c) % 64);
    }
    static void clear_bit(Bits& b, Color c) {
        b[static_cast<std::size_t>(c) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(c) % 64));
    }
    static bool intersects(const Bits& a, const Bits& b) {
        for (std::size_t i = 0; i < Words; ++i)
            if (a[i] & b[i])
                return true;
        return false;
    }
    static void intersect(Bits& a, const Bits& b) {
        for (std::size_t i = 0; i < Words; ++i)
            a[i] &= b[i];
    }

    /// cover[c] = window starts s whose window of length d contains c.
    std::vector<Bits> make_cover(std::size_t d) const {
        std::vector<Bits> cover(static_cast<std::size_t>(t_), Bits{});
        for (Color c = 0; c < t_; ++c)
            for (std::size_t k = 0; k < d; ++k)
                set_bit(cover[c], static_cast<Color>((c - static_cast<Color>(k) + t_) % t_));
        return cover;
    }

    bool fits(Vertex x, Color c) const {
        if (test_bit(used_[x], c))
            return false;
        return full_[x] || intersects(starts_[x], cover_[g_.degree(x)][c]);
    }

    bool usable(std::size_t e, Color c) const {
        const Edge& ed = g_.edge(e);
        return fits(ed.u, c) && fits(ed.v, c);
    }

    bool has_usable_color(std::size_t e) const {
        for (Color c = 0; c < t_; ++c)
            if (usable(e, c))
                return true;
        return false;
    }

    bool neighbors_alive(Vertex x) const {
        if (remaining_[x] == 0)
            return true;
        for (std::size_t f : g_.incident(x))
            if (assignment_[f] < 0 && !has_usable_color(f))
                return false;
        return true;
    }

    bool out_of_budget() {
        if (nodes_ >= opts_.budget.max_nodes)
            return true;
        if (opts_.budget.time_limit && (nodes_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() - start_ > *opts_.budget.time_limit)
            return true;
        return false;
    }

    bool expand(std::size_t depth, bool seen_other_color) {
        if (depth == order_.size())
            return distinct_ == static_cast<std::size_t>(t_);
        const std::size_t e = order_[depth];
        const Vertex a = g_.edge(e).u, b = g_.edge(e).v;
        const std::size_t edges_left_after = order_.size() - depth - 1;

        // rotation: the first edge takes color 1
        const Color last = depth == 0 ? 1 : t_;
        const Color reflect_cap = (t_ + 2) / 2; // 1-based cap ceil((t+1)/2)

        for (Color c = 0; c < last; ++c) {
            if (opts_.break_reflection && !seen_other_color && c != 0 && c + 1 > reflect_cap)
                break;
            if (!usable(e, c))
                continue;
            const std::size_t distinct_after = distinct_ + (color_count_[c] == 0 ? 1 : 0);
            if (edges_left_after + distinct_after < static_cast<std::size_t>(t_))
                continue;
            if (out_of_budget()) {
                aborted_ = true;
                return false;
            }
            ++nodes_;

            const Bits saved_a = starts_[a], saved_b = starts_[b];
            assign(e, a, b, c);
            bool ok = !opts_.forward_check || (neighbors_alive(a) && neighbors_alive(b));
            if (ok && expand(depth + 1, seen_other_color || c != 0))
                return true;
            unassign(e, a, b, c);
            starts_[a] = saved_a;
            starts_[b] = saved_b;
            if (aborted_)
                return false;
        }
        return false;
    }

    void assign(std::size_t e, Vertex a, Vertex b, Color c) {
        assignment_[e] = c;
        for (Vertex x : {a, b}) {
            set_bit(used_[x], c);
            --remaining_[x];
            if (!full_[x])
                intersect(starts_[x], cover_[g_.degree(x)][c]);
        }
        if (color_count_[c]++ == 0)
            ++distinct_;
    }

    void unassign(std::size_t e, Vertex a, Vertex b, Color c) {
        assignment_[e] = -1;
        for (Vertex x : {a, b}) {
            clear_bit(used_[x], c);
            ++remaining_[x];
        }
        if (--color_count_[c] == 0)
            --distinct_;
    }

    const Graph& g_;
    Color t_;
    SolverOptions opts_;
    std::vector<std::size_t> order_;
    std::vector<Bits> used_;
    std::vector<Bits> starts_;
    std::vector<bool> full_;
    std::vector<std::size_t> remaining_;
    std::vector<std::vector<Bits>> cover_;
    std::vector<int> assignment_;
    std::vector<std::size_t> color_count_;
    std::size_t distinct_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

template <std::size_t Words>
SolveOutcome run_search(const Graph& g, Color t, const SolverOptions& opts) {
    return CyclicSearch<Words>(g, t, opts).run();
}

} // namespace detail

inline constexpr Color max_search_colors = 1024;

/// Decides whether g has an interval cyclic t-coloring. A feasible answer
/// always carries a validated witness; running out of budget yields
/// Decision::timeout, never infeasible.
inline SolveOutcome decide(const Graph& g, Color t, const SolverOptions& opts = {}) {
    if (t < 1)
        throw invalid_parameter("t must be positive");
    SolveOutcome trivial;
    trivial.t = t;
    trivial.decision = Decision::infeasible;
    if (g.edge_count() == 0) {
        trivial.reason = "graph has no edges";
        return trivial;
    }
    if (static_cast<std::size_t>(t) > g.edge_count()) {
        trivial.reason = "t exceeds edge count";
        return trivial;
    }
    if (static_cast<std::size_t>(t) < g.max_degree()) {
        trivial.reason = "t below maximum degree";
        return trivial;
    }
    if (t > max_search_colors)
        throw invalid_parameter("t above the supported search limit of " +
                                std::to_string(max_search_colors));

    SolveOutcome out;
    if (t <= 64)
        out = detail::run_search<1>(g, t, opts);
    else if (t <= 128)
        out = detail::run_search<2>(g, t, opts);
    else if (t <= 256)
        out = detail::run_search<4>(g, t, opts);
    else if (t <= 512)
        out = detail::run_search<8>(g, t, opts);
    else
        out = detail::run_search<16>(g, t, opts);

    if (out.witness && !validate_cyclic(g, *out.witness).valid())
        throw std::logic_error("search produced an invalid witness at t=" + std::to_string(t));
    return out;
}

struct FeasibleSet {
    Color t_lo = 0;
    Color t_hi = 0;
    std::vector<Color> members;
    std::map<Color, EdgeColoring> witnesses;
    /// One outcome per t in [t_lo, t_hi].
    std::vector<SolveOutcome> outcomes;
    bool exhausted = true;

    std::vector<Color> undecided() const {
        std::vector<Color> out;
        for (const auto& o : outcomes)
            if (o.decision == Decision::timeout)
                out.push_back(o.t);
        return out;
    }
    bool empty_range() const { return t_lo > t_hi; }
};

struct FeasibleSetOptions {
    SolverOptions solver;
    std::optional<Color> t_hi;
    /// Cap the range with the best closed-form upper bound.
    bool use_bounds = true;
    unsigned jobs = 1;
};

/// Searched range: from max(1, Delta) up to min(|E|, t_hi, best bound).
inline std::pair<Color, Color> feasible_range(const Graph& g, const FeasibleSetOptions& opts) {
    Color lo = static_cast<Color>(std::max<std::size_t>(1, g.max_degree()));
    long long hi = static_cast<long long>(g.edge_count());
    if (opts.t_hi)
        hi = std::min<long long>(hi, *opts.t_hi);
    if (opts.use_bounds)
        hi = std::min(hi, report(g).best_upper);
    return {lo, static_cast<Color>(hi)};
}

/// Decides every t in the searched range; with jobs > 1 distinct t values
/// run on separate threads. Members do not depend on the job count.
inline FeasibleSet feasible_set(const Graph& g, const FeasibleSetOptions& opts = {}) {
    FeasibleSet fs;
    std::tie(fs.t_lo, fs.t_hi) = feasible_range(g, opts);
    if (fs.t_lo > fs.t_hi)
        return fs;
    const std::size_t count = static_cast<std::size_t>(fs.t_hi - fs.t_lo + 1);
    fs.outcomes.resize(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fs.outcomes[i] = decide(g, fs.t_lo + static_cast<Color>(i), opts.solver);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(count)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
        for (auto& th : threads)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    for (const auto& o : fs.outcomes) {
        if (o.decision == Decision::feasible) {
            fs.members.push_back(o.t);
            fs.witnesses.emplace(o.t, *o.witness);
        } else if (o.decision == Decision::timeout) {
            fs.exhausted = false;
        }
    }
    return fs;
}

struct Extremal {
    std::optional<Color> least;
    std::optional<Color> greatest;
    bool exhausted = true;
};

/// (w_c, W_c) from the feasible set; both empty when no t is feasible.
inline Extremal extremal(const Graph& g, const FeasibleSetOptions& opts = {}) {
    auto fs = feasible_set(g, opts);
    Extremal x;
    x.exhausted = fs.exhausted;
    if (!fs.members.empty()) {
        x.least = fs.members.front();
        x.greatest = fs.members.back();
    }
    return x;
}

inline bool is_gap_free(const std::vector<Color>& members) {
    return members.empty() ||
           static_cast<std::size_t>(members.back() - members.front() + 1) == members.size();
}

struct ScanRecord {
    std::string name;
    std::size_t vertex_count = 0;
    bool skipped = false;
    std::vector<Color> members;
    std::optional<Color> greatest;
    bool gap_free = true;
    /// Connected triangle-free colorable graphs: W_c <= |V|.
    bool triangle_free_applies = false;
    bool triangle_free_holds = true;
    /// Connected colorable graphs with >= 2 vertices: W_c <= 2|V| - 3.
    bool general_applies = false;
    bool general_holds = true;

    bool counterexample() const {
        return (triangle_free_applies && !triangle_free_holds) ||
               (general_applies && !general_holds);
    }
};

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Computes exhausted feasible sets and checks both conjectured caps on W_c.
inline std::vector<ScanRecord> conjecture_scan(const std::vector<NamedGraph>& corpus,
                                               const FeasibleSetOptions& opts = {}) {
    std::vector<ScanRecord> out;
    for (const auto& [name, g] : corpus) {
        ScanRecord r;
        r.name = name;
        r.vertex_count = g.vertex_count();
        auto fs = feasible_set(g, opts);
        if (!fs.exhausted) {
            r.skipped = true;
            out.push_back(std::move(r));
            continue;
        }
        r.members = fs.members;
        r.gap_free = is_gap_free(fs.members);
        if (!fs.members.empty()) {
            r.greatest = fs.members.back();
            const bool connected = is_connected(g);
            const auto n = static_cast<Color>(g.vertex_count());
            r.triangle_free_applies = connected && !has_triangle(g) && g.vertex_count() >= 2;
            r.triangle_free_holds = *r.greatest <= n;
            r.general_applies = connected && g.vertex_count() >= 2;
            r.general_holds = *r.greatest <= 2 * n - 3;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace icc
