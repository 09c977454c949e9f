#pragma once

#include "icc/graph.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace icc {

using Color = int;

/// Edge coloring with colors 1..t, one entry per edge in canonical order.
struct EdgeColoring {
    Color t = 0;
    std::vector<Color> colors;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Maps any integer onto the color circle [1, t].
constexpr Color wrap_color(long long x, Color t) {
    long long r = (x - 1) % t;
    if (r < 0)
        r += t;
    return static_cast<Color>(r + 1);
}

/// S(v, alpha): sorted, duplicate-free set of colors on edges at v.
inline std::vector<Color> spectrum(const Graph& g, const EdgeColoring& coloring, Vertex v) {
    if (v >= g.vertex_count())
        throw invalid_parameter("vertex out of range");
    if (coloring.colors.size() != g.edge_count())
        throw invalid_parameter("coloring length does not match edge count");
    std::vector<Color> s;
    for (std::size_t e : g.incident(v))
        s.push_back(coloring.colors[e]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

namespace detail {

inline std::vector<bool> color_mask(const std::vector<Color>& s, std::size_t d, Color t) {
    if (t < 1)
        throw invalid_parameter("t must be positive");
    if (s.size() != d)
        throw invalid_parameter("color set size differs from d");
    std::vector<bool> mask(static_cast<std::size_t>(t), false);
    for (Color c : s) {
        if (c < 1 || c > t)
            throw invalid_parameter("color outside [1, t]");
        if (mask[c - 1])
            throw invalid_parameter("color set has repeated entries");
        mask[c - 1] = true;
    }
    return mask;
}

} // namespace detail

/// True iff `s` occupies d consecutive positions on the circle 1..t.
/// A nonempty proper subset qualifies exactly when it forms one circular run.
inline bool is_cyclic_interval(const std::vector<Color>& s, std::size_t d, Color t) {
    const auto mask = detail::color_mask(s, d, t);
    if (d == 0 || d == static_cast<std::size_t>(t))
        return true;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        std::size_t prev = i == 0 ? mask.size() - 1 : i - 1;
        if (mask[i] && !mask[prev])
            ++runs;
    }
    return runs == 1;
}

/// True iff `s` is a plain integer interval (no wrap-around).
inline bool is_interval(const std::vector<Color>& s, std::size_t d, Color t) {
    detail::color_mask(s, d, t);
    if (d == 0)
        return true;
    auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return static_cast<std::size_t>(*hi - *lo + 1) == d;
}

struct SpectrumReport {
    Vertex vertex = 0;
    std::vector<Color> colors;
    bool is_interval = false;
    bool is_cyclic_interval = false;
};

/// Spectrum of v together with its classification; a vertex whose incident
/// colors repeat or leave [1, t] is classified as neither.
inline SpectrumReport spectrum_report(const Graph& g, const EdgeColoring& coloring, Vertex v) {
    SpectrumReport r;
    r.vertex = v;
    r.colors = spectrum(g, coloring, v);
    const bool in_range = std::all_of(r.colors.begin(), r.colors.end(),
                                      [&](Color c) { return c >= 1 && c <= coloring.t; });
    if (in_range && r.colors.size() == g.degree(v)) {
        r.is_interval = is_interval(r.colors, g.degree(v), coloring.t);
        r.is_cyclic_interval = is_cyclic_interval(r.colors, g.degree(v), coloring.t);
    }
    return r;
}

enum class ViolationKind {
    not_proper,
    color_unused,
    spectrum_not_cyclic_interval,
    spectrum_not_interval,
    color_out_of_range,
};

inline std::string_view to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::not_proper: return "not-proper";
    case ViolationKind::color_unused: return "color-unused";
    case ViolationKind::spectrum_not_cyclic_interval: return "spectrum-not-cyclic-interval";
    case ViolationKind::spectrum_not_interval: return "spectrum-not-interval";
    case ViolationKind::color_out_of_range: return "color-out-of-range";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::optional<Vertex> vertex;
    std::optional<Color> color;
    std::optional<std::size_t> edge;
    std::optional<std::pair<std::size_t, std::size_t>> edge_pair;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }

    bool has(ViolationKind k) const {
        return std::any_of(violations.begin(), violations.end(),
                           [k](const Violation& v) { return v.kind == k; });
    }
};

enum class SpectrumMode { cyclic, interval };

/// Checks properness, surjectivity onto [1, t] and the per-vertex spectrum
/// condition for `mode`. Every violation is reported.
inline ValidationResult validate(const Graph& g, const EdgeColoring& coloring, SpectrumMode mode) {
    if (coloring.colors.size() != g.edge_count())
        throw invalid_parameter("coloring has " + std::to_string(coloring.colors.size()) +
                                " colors for " + std::to_string(g.edge_count()) + " edges");
    if (coloring.t < 1)
        throw invalid_parameter("t must be positive");

    ValidationResult result;
    const Color t = coloring.t;
    std::vector<bool> used(static_cast<std::size_t>(t), false);
    for (std::size_t e = 0; e < coloring.colors.size(); ++e) {
        Color c = coloring.colors[e];
        if (c < 1 || c > t)
            result.violations.push_back({ViolationKind::color_out_of_range, {}, c, e, {}});
        else
            used[c - 1] = true;
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        bool proper = true;
        bool in_range = true;
        for (std::size_t i = 0; i < inc.size(); ++i) {
            Color ci = coloring.colors[inc[i]];
            if (ci < 1 || ci > t)
                in_range = false;
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                if (ci == coloring.colors[inc[j]]) {
                    proper = false;
                    result.violations.push_back({ViolationKind::not_proper, v, ci, {},
                                                 std::pair{inc[i], inc[j]}});
                }
            }
        }
        if (!proper || !in_range)
            continue;
        const auto s = spectrum(g, coloring, v);
        if (mode == SpectrumMode::cyclic && !is_cyclic_interval(s, inc.size(), t))
            result.violations.push_back({ViolationKind::spectrum_not_cyclic_interval, v, {}, {}, {}});
        if (mode == SpectrumMode::interval && !is_interval(s, inc.size(), t))
            result.violations.push_back({ViolationKind::spectrum_not_interval, v, {}, {}, {}});
    }

    for (Color c = 1; c <= t; ++c)
        if (!used[c - 1])
            result.violations.push_back({ViolationKind::color_unused, {}, c, {}, {}});
    return result;
}

inline ValidationResult validate_cyclic(const Graph& g, const EdgeColoring& coloring) {
    return validate(g, coloring, SpectrumMode::cyclic);
}

inline ValidationResult validate_interval(const Graph& g, const EdgeColoring& coloring) {
    return validate(g, coloring, SpectrumMode::interval);
}

/// Adds `shift` to every color on the circle 1..t.
inline EdgeColoring rotate(EdgeColoring coloring, long long shift) {
    for (Color& c : coloring.colors)
        c = wrap_color(c + shift, coloring.t);
    return coloring;
}

/// Maps every color c to t + 1 - c.
inline EdgeColoring reflect(EdgeColoring coloring) {
    for (Color& c : coloring.colors)
        c = coloring.t + 1 - c;
    return coloring;
}

} // namespace icc
