#pragma once

#include "icc/bounds.hpp"
#include "icc/coloring.hpp"
#include "icc/graph.hpp"
#include "icc/noncolorable.hpp"
#include "icc/solver.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace icc {

using json = nlohmann::ordered_json;

/// Malformed or non-canonical input file.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- graphs

inline json to_json(const Graph& g) {
    json j;
    j["vertex_count"] = g.vertex_count();
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty())
        j["labels"] = g.labels();
    return j;
}

namespace detail {

inline std::size_t read_index(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw format_error(std::string(what) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

} // namespace detail

/// Parses the graph format. The edge list must already be canonical
/// (u < v, sorted, no repeats) because colorings index into it.
inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges"))
        throw format_error("graph needs 'vertex_count' and 'edges'");
    const std::size_t n = detail::read_index(j["vertex_count"], "vertex_count");
    if (!j["edges"].is_array())
        throw format_error("'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw format_error("each edge must be a pair [u, v]");
        Edge ed{detail::read_index(e[0], "edge endpoint"), detail::read_index(e[1], "edge endpoint")};
        if (ed.u >= ed.v)
            throw format_error("edge [" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                               "] must satisfy u < v");
        if (ed.v >= n)
            throw format_error("edge endpoint out of range");
        if (!edges.empty() && !(edges.back() < ed))
            throw format_error("edges must be sorted and distinct");
        edges.push_back(ed);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != n)
            throw format_error("'labels' must list one string per vertex");
        for (const auto& l : j["labels"]) {
            if (!l.is_string())
                throw format_error("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return Graph(n, std::move(edges), std::move(labels));
}

// ------------------------------------------------------------- colorings

inline json to_json(const EdgeColoring& c) {
    json j;
    j["t"] = c.t;
    j["colors"] = c.colors;
    return j;
}

inline EdgeColoring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("colors"))
        throw format_error("coloring needs 't' and 'colors'");
    if (!j["t"].is_number_integer() || j["t"].get<long long>() < 1)
        throw format_error("'t' must be a positive integer");
    if (!j["colors"].is_array())
        throw format_error("'colors' must be an array");
    EdgeColoring c;
    c.t = j["t"].get<Color>();
    for (const auto& x : j["colors"]) {
        if (!x.is_number_integer())
            throw format_error("colors must be integers");
        c.colors.push_back(x.get<Color>());
    }
    return c;
}

inline json to_json(const ValidationResult& r) {
    json j;
    j["verdict"] = r.valid() ? "valid" : "invalid";
    json vs = json::array();
    for (const auto& v : r.violations) {
        json x;
        x["kind"] = std::string(to_string(v.kind));
        if (v.vertex)
            x["vertex"] = *v.vertex;
        if (v.color)
            x["color"] = *v.color;
        if (v.edge)
            x["edge"] = *v.edge;
        if (v.edge_pair)
            x["edges"] = {v.edge_pair->first, v.edge_pair->second};
        vs.push_back(std::move(x));
    }
    j["violations"] = std::move(vs);
    return j;
}

// ---------------------------------------------------------------- solver

inline json to_json(const SolveOutcome& o, bool timing = false) {
    json j;
    j["t"] = o.t;
    j["decision"] = std::string(to_string(o.decision));
    j["witness"] = o.witness ? to_json(*o.witness) : json(nullptr);
    j["nodes_explored"] = o.nodes_explored;
    j["reason"] = o.reason;
    if (timing)
        j["elapsed_ms"] = std::chrono::duration<double, std::milli>(o.elapsed).count();
    return j;
}

inline json to_json(const FeasibleSet& fs) {
    json j;
    j["range"] = {fs.t_lo, fs.t_hi};
    j["members"] = fs.members;
    j["exhausted"] = fs.exhausted;
    j["undecided"] = fs.undecided();
    json w = json::object();
    for (const auto& [t, c] : fs.witnesses)
        w[std::to_string(t)] = to_json(c);
    j["witnesses"] = std::move(w);
    return j;
}

inline FeasibleSet feasible_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("range") || !j.contains("members") || !j.contains("exhausted"))
        throw format_error("feasible set needs 'range', 'members' and 'exhausted'");
    FeasibleSet fs;
    fs.t_lo = j["range"].at(0).get<Color>();
    fs.t_hi = j["range"].at(1).get<Color>();
    fs.members = j["members"].get<std::vector<Color>>();
    fs.exhausted = j["exhausted"].get<bool>();
    if (j.contains("witnesses"))
        for (const auto& [key, value] : j["witnesses"].items())
            fs.witnesses.emplace(std::stoi(key), coloring_from_json(value));
    return fs;
}

// ---------------------------------------------------------------- bounds

inline json to_json(const BoundEntry& e) {
    json j;
    j["name"] = e.name;
    j["value"] = e.value ? json(*e.value) : json("not-applicable");
    json p = json::object();
    for (const auto& pr : e.premises)
        p[pr.name] = pr.holds;
    j["premises"] = std::move(p);
    return j;
}

inline json to_json(const BoundReport& r) {
    json j;
    json up = json::array(), low = json::array();
    for (const auto& e : r.upper)
        up.push_back(to_json(e));
    for (const auto& e : r.lower)
        low.push_back(to_json(e));
    j["upper"] = std::move(up);
    j["lower"] = std::move(low);
    j["min_t"] = r.min_t;
    j["excluded_t"] = std::string(to_string(r.excluded_t));
    j["best_upper"] = r.best_upper;
    return j;
}

inline std::string bound_table(const BoundReport& r) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %-16s %s\n", "bound", "value", "premises");
    out << line;
    auto row = [&](const char* kind, const BoundEntry& e) {
        std::string premises;
        for (const auto& p : e.premises)
            premises += (premises.empty() ? "" : ", ") + p.name + (p.holds ? "=yes" : "=no");
        const std::string value = e.value ? std::to_string(*e.value) : "n/a";
        std::snprintf(line, sizeof line, "%-28s %-16s %s\n", (std::string(kind) + e.name).c_str(),
                      value.c_str(), premises.c_str());
        out << line;
    };
    for (const auto& e : r.upper)
        row("upper:", e);
    for (const auto& e : r.lower)
        row("lower:", e);
    out << "min t: " << r.min_t << "\nexcluded t: " << to_string(r.excluded_t)
        << "\nbest upper: " << r.best_upper << "\n";
    return out.str();
}

// ---------------------------------------------------------- certificates

inline json to_json(const Certificate& c) {
    json j;
    j["rule"] = std::string(to_string(c.rule));
    json ps = json::array();
    for (const auto& p : c.premises)
        ps.push_back({{"name", p.name}, {"value", p.value}, {"condition", p.condition}, {"pass", p.pass}});
    j["premises"] = std::move(ps);
    j["conclusive"] = c.conclusive();
    j["conclusion"] = c.conclusion() ? json(*c.conclusion()) : json(nullptr);
    if (c.rule == CertificateRule::exhaustive_search) {
        json tr = json::array();
        for (const auto& o : c.transcript)
            tr.push_back({{"t", o.t},
                          {"decision", std::string(to_string(o.decision))},
                          {"nodes_explored", o.nodes_explored},
                          {"reason", o.reason}});
        j["transcript"] = std::move(tr);
    }
    j["notes"] = c.notes;
    return j;
}

inline json to_json(const ScanRecord& r) {
    json j;
    j["name"] = r.name;
    j["vertex_count"] = r.vertex_count;
    j["skipped"] = r.skipped;
    j["members"] = r.members;
    j["greatest"] = r.greatest ? json(*r.greatest) : json(nullptr);
    j["gap_free"] = r.gap_free;
    j["triangle_free_cap"] = {{"applies", r.triangle_free_applies}, {"holds", r.triangle_free_holds}};
    j["general_cap"] = {{"applies", r.general_applies}, {"holds", r.general_holds}};
    j["counterexample"] = r.counterexample();
    return j;
}

// --------------------------------------------------------------- files

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw format_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw format_error(path + ": " + e.what());
    }
}

/// Two-space indented serialization; equal values give identical bytes.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw format_error("cannot write " + path);
    out << text;
}

// ------------------------------------------------------------------- DOT

/// DOT rendering with edge colors as labels; colors are also mapped onto
/// an HSV hue ramp so equal colors share a hue.
inline std::string to_dot(const Graph& g, const EdgeColoring* coloring = nullptr) {
    if (coloring && coloring->colors.size() != g.edge_count())
        throw invalid_parameter("coloring length does not match edge count");
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (!g.labels().empty())
            out << " [label=\"" << g.labels()[v] << "\"]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        out << "  " << e.u << " -- " << e.v;
        if (coloring) {
            const Color c = coloring->colors[i];
            const double hue = coloring->t > 0 ? static_cast<double>(c - 1) / coloring->t : 0.0;
            char hsv[32];
            std::snprintf(hsv, sizeof hsv, "%.3f 0.850 0.850", hue);
            out << " [label=\"" << c << "\", color=\"" << hsv << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace icc
