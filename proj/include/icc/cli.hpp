#pragma once

#include "icc/bounds.hpp"
#include "icc/constructions.hpp"
#include "icc/generators.hpp"
#include "icc/io.hpp"
#include "icc/noncolorable.hpp"
#include "icc/solver.hpp"
#include "icc/tree_enum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace icc::cli {

enum ExitCode : int { ok = 0, rejected = 1, usage = 2, budget = 3 };

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t parse_size(const std::string& s, const char* what) {
    std::size_t value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw usage_error(std::string(what) + ": expected a nonnegative integer, got '" + s + "'");
    return value;
}

inline std::vector<std::size_t> parse_sizes(const std::vector<std::string>& raw) {
    std::vector<std::size_t> out;
    for (const auto& s : raw)
        out.push_back(parse_size(s, "parameter"));
    return out;
}

inline void need(const std::vector<std::size_t>& p, std::size_t count, const std::string& what) {
    if (p.size() != count)
        throw usage_error(what + " takes " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(p.size()));
}

/// Writes to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_text_file(path, text);
}

inline Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

inline EdgeColoring load_coloring(const std::string& path, const Graph& g) {
    auto c = coloring_from_json(read_json_file(path));
    if (c.colors.size() != g.edge_count())
        throw format_error(path + ": coloring has " + std::to_string(c.colors.size()) +
                           " colors but the graph has " + std::to_string(g.edge_count()) + " edges");
    return c;
}

inline SolverOptions solver_options(unsigned long long nodes, double seconds) {
    SolverOptions o;
    o.budget.max_nodes = nodes;
    if (seconds > 0)
        o.budget.time_limit = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::duration<double>(seconds));
    return o;
}

inline Graph generate(const std::string& family, const std::vector<std::size_t>& p) {
    if (family == "cycle") {
        need(p, 1, family);
        return make_cycle(p[0]);
    }
    if (family == "path") {
        need(p, 1, family);
        return make_path(p[0]);
    }
    if (family == "complete") {
        need(p, 1, family);
        return make_complete(p[0]);
    }
    if (family == "bipartite") {
        need(p, 2, family);
        return make_complete_bipartite(p[0], p[1]);
    }
    if (family == "tripartite") {
        need(p, 3, family);
        return make_complete_tripartite(p[0], p[1], p[2]);
    }
    if (family == "hypercube") {
        need(p, 1, family);
        return make_hypercube(p[0]);
    }
    if (family == "gdn") {
        need(p, 2, family);
        return make_gdn(p[0], p[1]);
    }
    if (family == "kstar") {
        need(p, 2, family);
        return make_kstar(p[0], p[1]);
    }
    if (family == "hub-tree") {
        need(p, 2, family);
        return make_hub_tree(p[0], p[1]);
    }
    if (family == "star") {
        need(p, 1, family);
        return make_star(p[0]);
    }
    if (family == "double-star") {
        need(p, 2, family);
        return make_double_star(p[0], p[1]);
    }
    if (family == "fish") {
        need(p, 0, family);
        return make_fish();
    }
    if (family == "petersen") {
        need(p, 0, family);
        return make_petersen();
    }
    throw usage_error("unknown family '" + family + "'");
}

inline std::string family_list() {
    return "cycle N | path M | complete N | bipartite M N | tripartite L M N | hypercube N | "
           "gdn D N | kstar N M | hub-tree H S | star K | double-star A B | fish | petersen | "
           "trees N (-o DIR) | tree-hat -g TREE | noncolorable --rule tree-hat|kstar | "
           "noncolorable --degree D";
}

inline int exit_for(const FeasibleSet& fs) {
    if (!fs.exhausted)
        return budget;
    return fs.members.empty() ? rejected : ok;
}

inline int exit_for(Decision d) {
    switch (d) {
    case Decision::feasible: return ok;
    case Decision::infeasible: return rejected;
    case Decision::timeout: return budget;
    }
    return budget;
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval cyclic edge-coloring toolkit", "icc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every verb");

    // gen
    std::string gen_family, gen_out, gen_tree, gen_rule, gen_cert;
    std::vector<std::string> gen_params;
    std::size_t gen_hubs = 10, gen_leaves = 10, gen_n = 2, gen_m = 12, gen_degree = 0;
    auto* gen = app.add_subcommand("gen", "Generate a graph family as graph JSON");
    gen->add_option("family", gen_family, detail::family_list())->required();
    gen->add_option("params", gen_params, "Family parameters");
    gen->add_option("-o,--output", gen_out, "Output path (directory for 'trees'); stdout when omitted");
    gen->add_option("-g,--graph", gen_tree, "Input tree for tree-hat");
    gen->add_option("--rule", gen_rule, "noncolorable rule")->check(CLI::IsMember({"tree-hat", "kstar"}));
    gen->add_option("--hubs", gen_hubs, "tree-hat rule: hubs of the hub tree");
    gen->add_option("--leaves", gen_leaves, "tree-hat rule: leaves per hub");
    gen->add_option("--n", gen_n, "kstar rule: core is K_{2n+1}");
    gen->add_option("--m", gen_m, "kstar rule: pendant leaves on the hub");
    gen->add_option("--degree", gen_degree, "noncolorable graph with this maximum degree");
    gen->add_option("--certificate", gen_cert, "noncolorable: certificate output path");

    // color
    std::string col_name, col_graph_out, col_out, col_graph_in, col_from;
    std::vector<std::string> col_params;
    auto* color = app.add_subcommand("color", "Build a colored construction");
    color->add_option("construction", col_name,
                      "gdn D N | complete-odd N | bipartite-cyclic M N | bipartite-interval M N | "
                      "tripartite L M N | hypercube-base N | hypercube-cyclic N | "
                      "mod-reduce M N T | mod-reduce T -g G --from C")
        ->required();
    color->add_option("params", col_params, "Construction parameters");
    color->add_option("-o,--output", col_graph_out, "Graph output path");
    color->add_option("-c,--coloring", col_out, "Coloring output path; stdout when omitted");
    color->add_option("-g,--graph", col_graph_in, "mod-reduce: input graph");
    color->add_option("--from", col_from, "mod-reduce: input interval coloring");

    // check
    std::string chk_graph, chk_coloring, chk_mode = "cyclic";
    auto* check = app.add_subcommand("check", "Validate a coloring");
    check->add_option("-g,--graph", chk_graph)->required();
    check->add_option("-c,--coloring", chk_coloring)->required();
    check->add_option("--mode", chk_mode)->check(CLI::IsMember({"cyclic", "interval"}));

    // solve
    std::string sol_graph, sol_out;
    int sol_t = 0;
    int sol_t_max = 0;
    bool sol_set = false, sol_no_bounds = false, sol_timing = false;
    unsigned long long sol_budget = SearchBudget{}.max_nodes;
    double sol_seconds = 0;
    unsigned sol_jobs = 1;
    auto* solve = app.add_subcommand("solve", "Decide one t or compute the feasible set");
    solve->add_option("-g,--graph", sol_graph)->required();
    auto* t_opt = solve->add_option("--t", sol_t, "Decide this single t");
    auto* fs_opt = solve->add_flag("--feasible-set", sol_set, "Decide every admissible t");
    t_opt->excludes(fs_opt);
    solve->add_option("--budget", sol_budget, "Node limit per t");
    solve->add_option("--time-limit", sol_seconds, "Seconds per t (0 = none)");
    solve->add_option("--jobs", sol_jobs, "Worker threads across t")->check(CLI::PositiveNumber);
    solve->add_option("--t-max", sol_t_max, "Upper end of the scanned range");
    solve->add_flag("--no-bounds", sol_no_bounds, "Scan up to |E| instead of the best bound");
    solve->add_flag("--timing", sol_timing, "Include elapsed time in the output");
    solve->add_option("-o,--output", sol_out);

    // bounds
    std::string bnd_graph;
    bool bnd_table = false;
    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and obstructions");
    bounds->add_option("-g,--graph", bnd_graph)->required();
    bounds->add_flag("--table", bnd_table, "Human-readable table instead of JSON");

    // certify
    std::string cer_graph, cer_out;
    unsigned long long cer_budget = SearchBudget{}.max_nodes;
    double cer_seconds = 0;
    auto* certify = app.add_subcommand("certify", "Certificate of non-colorability or a witness");
    certify->add_option("-g,--graph", cer_graph)->required();
    certify->add_option("--budget", cer_budget, "Node limit per t");
    certify->add_option("--time-limit", cer_seconds, "Seconds per t (0 = none)");
    certify->add_option("-o,--output", cer_out);

    // scan
    std::string scn_dir, scn_out;
    unsigned long long scn_budget = SearchBudget{}.max_nodes;
    unsigned scn_jobs = 1;
    auto* scan = app.add_subcommand("scan", "Feasible sets and conjectured caps over a corpus");
    scan->add_option("--corpus", scn_dir, "Directory of graph JSON files")->required();
    scan->add_option("--budget", scn_budget, "Node limit per t");
    scan->add_option("--jobs", scn_jobs)->check(CLI::PositiveNumber);
    scan->add_option("-o,--output", scn_out);

    // export-dot
    std::string dot_graph, dot_coloring, dot_out;
    auto* dot = app.add_subcommand("export-dot", "Graphviz DOT with colors as edge labels");
    dot->add_option("-g,--graph", dot_graph)->required();
    dot->add_option("-c,--coloring", dot_coloring);
    dot->add_option("-o,--output", dot_out);

    std::vector<std::string> argv_store{"icc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "icc: " << e.what() << "\n";
        return usage;
    }

    try {
        if (gen->parsed()) {
            if (gen_family == "trees") {
                auto p = detail::parse_sizes(gen_params);
                detail::need(p, 1, "trees");
                if (gen_out.empty())
                    throw detail::usage_error("trees needs -o DIR");
                std::filesystem::create_directories(gen_out);
                std::size_t written = 0;
                for (std::size_t n = 2; n <= p[0]; ++n) {
                    const auto trees = all_trees(n);
                    for (std::size_t i = 0; i < trees.size(); ++i) {
                        std::ostringstream name;
                        name << "tree_" << std::setw(2) << std::setfill('0') << n << "_" << std::setw(4)
                             << std::setfill('0') << i << ".json";
                        write_text_file((std::filesystem::path(gen_out) / name.str()).string(),
                                        dump(to_json(trees[i])));
                        ++written;
                    }
                }
                out << written << " trees written to " << gen_out << "\n";
                return ok;
            }
            if (gen_family == "tree-hat") {
                if (gen_tree.empty())
                    throw detail::usage_error("tree-hat needs -g TREE");
                detail::emit(gen_out, dump(to_json(make_tree_hat(detail::load_graph(gen_tree)))), out);
                return ok;
            }
            if (gen_family == "noncolorable") {
                CertifiedGraph cg = [&] {
                    if (gen_degree != 0)
                        return noncolorable_for_degree(gen_degree);
                    if (gen_rule == "tree-hat")
                        return build_certified_tree_hat(make_hub_tree(gen_hubs, gen_leaves));
                    if (gen_rule == "kstar")
                        return build_certified_kstar(gen_n, gen_m);
                    throw detail::usage_error("noncolorable needs --rule or --degree");
                }();
                detail::emit(gen_out, dump(to_json(cg.graph)), out);
                const std::string cert = dump(to_json(cg.certificate));
                if (gen_cert.empty())
                    err << cert;
                else
                    write_text_file(gen_cert, cert);
                return cg.accepted() ? ok : rejected;
            }
            detail::emit(gen_out, dump(to_json(detail::generate(gen_family, detail::parse_sizes(gen_params)))),
                         out);
            return ok;
        }

        if (color->parsed()) {
            auto p = detail::parse_sizes(col_params);
            ColoredGraph cg;
            if (col_name == "mod-reduce") {
                if (p.size() == 3) {
                    auto base = canonical_bipartite_interval(p[0], p[1]);
                    cg = {base.graph, mod_reduce(base.graph, base.coloring, static_cast<Color>(p[2]))};
                } else {
                    detail::need(p, 1, "mod-reduce with -g");
                    if (col_graph_in.empty() || col_from.empty())
                        throw detail::usage_error("mod-reduce T needs -g GRAPH and --from COLORING");
                    Graph g = detail::load_graph(col_graph_in);
                    auto c = detail::load_coloring(col_from, g);
                    cg = {g, mod_reduce(g, c, static_cast<Color>(p[0]))};
                }
            } else {
                cg = build({col_name, p});
            }
            if (!col_graph_out.empty())
                write_text_file(col_graph_out, dump(to_json(cg.graph)));
            detail::emit(col_out, dump(to_json(cg.coloring)), out);
            return ok;
        }

        if (check->parsed()) {
            Graph g = detail::load_graph(chk_graph);
            auto c = detail::load_coloring(chk_coloring, g);
            if (c.t < 1)
                throw format_error("'t' must be positive");
            auto r = validate(g, c, chk_mode == "interval" ? SpectrumMode::interval : SpectrumMode::cyclic);
            json j = to_json(r);
            j["t"] = c.t;
            j["mode"] = chk_mode;
            out << dump(j);
            return r.valid() ? ok : rejected;
        }

        if (solve->parsed()) {
            Graph g = detail::load_graph(sol_graph);
            SolverOptions so = detail::solver_options(sol_budget, sol_seconds);
            if (*t_opt) {
                if (sol_t < 1)
                    throw detail::usage_error("--t must be positive");
                auto o = decide(g, static_cast<Color>(sol_t), so);
                detail::emit(sol_out, dump(to_json(o, sol_timing)), out);
                return detail::exit_for(o.decision);
            }
            if (!sol_set)
                throw detail::usage_error("solve needs --t T or --feasible-set");
            FeasibleSetOptions fo;
            fo.solver = so;
            fo.jobs = sol_jobs;
            fo.use_bounds = !sol_no_bounds;
            if (sol_t_max > 0)
                fo.t_hi = static_cast<Color>(sol_t_max);
            auto fs = feasible_set(g, fo);
            detail::emit(sol_out, dump(to_json(fs)), out);
            return detail::exit_for(fs);
        }

        if (bounds->parsed()) {
            auto r = report(detail::load_graph(bnd_graph));
            out << (bnd_table ? bound_table(r) : dump(to_json(r)));
            return ok;
        }

        if (certify->parsed()) {
            Graph g = detail::load_graph(cer_graph);
            auto res = certify_noncolorable(g, detail::solver_options(cer_budget, cer_seconds));
            json j;
            j["verdict"] = res.witness ? "colorable" : res.noncolorable() ? "noncolorable" : "inconclusive";
            j["certificate"] = to_json(res.certificate);
            j["witness"] = res.witness ? to_json(*res.witness) : json(nullptr);
            detail::emit(cer_out, dump(j), out);
            if (res.noncolorable())
                return ok;
            return res.witness ? rejected : budget;
        }

        if (scan->parsed()) {
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(scn_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            std::vector<NamedGraph> corpus;
            for (const auto& f : files)
                corpus.push_back({f.stem().string(), detail::load_graph(f.string())});
            FeasibleSetOptions fo;
            fo.solver = detail::solver_options(scn_budget, 0);
            fo.jobs = scn_jobs;
            const auto records = conjecture_scan(corpus, fo);
            json arr = json::array();
            bool counterexample = false, skipped = false;
            for (const auto& r : records) {
                arr.push_back(to_json(r));
                counterexample = counterexample || r.counterexample();
                skipped = skipped || r.skipped;
            }
            detail::emit(scn_out, dump(arr), out);
            if (counterexample)
                return rejected;
            return skipped ? budget : ok;
        }

        if (dot->parsed()) {
            Graph g = detail::load_graph(dot_graph);
            if (dot_coloring.empty()) {
                detail::emit(dot_out, to_dot(g), out);
            } else {
                auto c = detail::load_coloring(dot_coloring, g);
                detail::emit(dot_out, to_dot(g, &c), out);
            }
            return ok;
        }
    } catch (const detail::usage_error& e) {
        err << "icc: " << e.what() << "\n";
        return usage;
    } catch (const format_error& e) {
        err << "icc: " << e.what() << "\n";
        return usage;
    } catch (const invalid_parameter& e) {
        err << "icc: " << e.what() << "\n";
        return usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "icc: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

} // namespace icc::cli
