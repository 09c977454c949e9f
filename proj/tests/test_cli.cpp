#include "icc/cli.hpp"
#include "icc/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace icc;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("icc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Result run(std::vector<std::string> args) const {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    void write(const std::string& name, const std::string& text) const { write_text_file(path(name), text); }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, CycleFeasibleSet) {
    ASSERT_EQ(run({"gen", "cycle", "5", "-o", path("c5.json")}).code, 0);
    auto r = run({"solve", "-g", path("c5.json"), "--feasible-set"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["members"], json::parse("[3, 5]"));
    EXPECT_TRUE(j["exhausted"].get<bool>());
}

TEST_F(Cli, TripartiteColorCheck) {
    ASSERT_EQ(run({"color", "tripartite", "1", "1", "3", "-o", path("g.json"), "-c", path("c.json")}).code, 0);
    auto r = run({"check", "-g", path("g.json"), "-c", path("c.json"), "--mode", "cyclic"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "valid");
    EXPECT_EQ(j["t"], 5);
}

TEST_F(Cli, UnusedColorIsInvalid) {
    ASSERT_EQ(run({"gen", "path", "3", "-o", path("p.json")}).code, 0);
    write("c.json", R"({"t": 3, "colors": [1, 2]})");
    auto r = run({"check", "-g", path("p.json"), "-c", path("c.json")});
    EXPECT_EQ(r.code, 1);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "invalid");
    EXPECT_EQ(j["violations"][0]["kind"], "color-unused");
}

TEST_F(Cli, IntervalModeRejectsWrap) {
    ASSERT_EQ(run({"gen", "cycle", "4", "-o", path("g.json")}).code, 0);
    write("c.json", R"({"t": 4, "colors": [1, 4, 2, 3]})");
    EXPECT_EQ(run({"check", "-g", path("g.json"), "-c", path("c.json")}).code, 0);
    EXPECT_EQ(run({"check", "-g", path("g.json"), "-c", path("c.json"), "--mode", "interval"}).code, 1);
}

TEST_F(Cli, GenRoundTripIsByteStable) {
    for (std::vector<std::string> fam : {std::vector<std::string>{"petersen"}, {"gdn", "4", "5"},
                                         {"tripartite", "2", "1", "3"}, {"hypercube", "4"}, {"kstar", "2", "3"}}) {
        fam.insert(fam.begin(), "gen");
        auto r = run(fam);
        ASSERT_EQ(r.code, 0);
        Graph g = graph_from_json(json::parse(r.out));
        EXPECT_EQ(dump(to_json(g)), r.out);
        EXPECT_EQ(graph_from_json(json::parse(dump(to_json(g)))), g);
    }
}

TEST_F(Cli, EveryConstructionPassesCheck) {
    const std::vector<std::vector<std::string>> matrix{
        {"gdn", "2", "3"},          {"gdn", "5", "8"},          {"complete-odd", "1"},
        {"complete-odd", "6"},      {"bipartite-cyclic", "2", "6"}, {"bipartite-cyclic", "6", "6"},
        {"tripartite", "1", "1", "1"}, {"tripartite", "2", "3", "4"}, {"hypercube-cyclic", "2"},
        {"hypercube-cyclic", "6"},  {"hypercube-base", "7"},    {"mod-reduce", "4", "6", "7"}};
    for (auto args : matrix) {
        const std::string name = args.front();
        args.insert(args.begin(), "color");
        args.insert(args.end(), {"-o", path("g.json"), "-c", path("c.json")});
        ASSERT_EQ(run(args).code, 0) << name;
        EXPECT_EQ(run({"check", "-g", path("g.json"), "-c", path("c.json")}).code, 0) << name;
    }
    ASSERT_EQ(run({"color", "bipartite-interval", "3", "4", "-o", path("g.json"), "-c", path("c.json")}).code, 0);
    EXPECT_EQ(run({"check", "-g", path("g.json"), "-c", path("c.json"), "--mode", "interval"}).code, 0);
}

TEST_F(Cli, ModReduceFromFiles) {
    ASSERT_EQ(run({"color", "bipartite-interval", "3", "5", "-o", path("g.json"), "-c", path("i.json")}).code, 0);
    ASSERT_EQ(run({"color", "mod-reduce", "6", "-g", path("g.json"), "--from", path("i.json"), "-c",
                   path("c.json")})
                  .code,
              0);
    EXPECT_EQ(run({"check", "-g", path("g.json"), "-c", path("c.json")}).code, 0);
    EXPECT_EQ(run({"color", "mod-reduce", "2", "-g", path("g.json"), "--from", path("i.json")}).code, 2);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"gen", "cycle"}).code, 2);
    EXPECT_EQ(run({"gen", "cycle", "x"}).code, 2);
    EXPECT_EQ(run({"gen", "cycle", "2"}).code, 2);
    EXPECT_EQ(run({"gen", "nope"}).code, 2);
    EXPECT_EQ(run({"check", "-g", path("missing.json"), "-c", path("missing.json")}).code, 2);
    EXPECT_EQ(run({"check", "-g", "x.json", "-c", "y.json", "--mode", "linear"}).code, 2);
    EXPECT_EQ(run({"solve", "-g", path("missing.json")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, FormatErrors) {
    write("bad.json", "{ not json");
    EXPECT_EQ(run({"bounds", "-g", path("bad.json")}).code, 2);
    write("unsorted.json", R"({"vertex_count": 3, "edges": [[1, 2], [0, 1]]})");
    EXPECT_EQ(run({"bounds", "-g", path("unsorted.json")}).code, 2);
    write("reversed.json", R"({"vertex_count": 3, "edges": [[1, 0]]})");
    EXPECT_EQ(run({"bounds", "-g", path("reversed.json")}).code, 2);
    write("range.json", R"({"vertex_count": 2, "edges": [[0, 2]]})");
    EXPECT_EQ(run({"bounds", "-g", path("range.json")}).code, 2);
    write("neg.json", R"({"vertex_count": -1, "edges": []})");
    EXPECT_EQ(run({"bounds", "-g", path("neg.json")}).code, 2);

    ASSERT_EQ(run({"gen", "path", "3", "-o", path("p.json")}).code, 0);
    write("short.json", R"({"t": 2, "colors": [1]})");
    EXPECT_EQ(run({"check", "-g", path("p.json"), "-c", path("short.json")}).code, 2);
    write("zero.json", R"({"t": 0, "colors": [1, 1]})");
    EXPECT_EQ(run({"check", "-g", path("p.json"), "-c", path("zero.json")}).code, 2);
}

TEST_F(Cli, SolveExitCodes) {
    ASSERT_EQ(run({"gen", "tripartite", "1", "1", "3", "-o", path("g.json")}).code, 0);
    EXPECT_EQ(run({"solve", "-g", path("g.json"), "--t", "5"}).code, 0);
    EXPECT_EQ(run({"solve", "-g", path("g.json"), "--t", "4"}).code, 1);
    EXPECT_EQ(run({"solve", "-g", path("g.json"), "--t", "0"}).code, 2);
    EXPECT_EQ(run({"solve", "-g", path("g.json"), "--t", "5", "--feasible-set"}).code, 2);

    ASSERT_EQ(run({"gen", "complete", "7", "-o", path("k7.json")}).code, 0);
    auto r = run({"solve", "-g", path("k7.json"), "--t", "8", "--budget", "1000"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.out)["decision"], "timeout");
    EXPECT_EQ(run({"solve", "-g", path("k7.json"), "--feasible-set", "--budget", "1000"}).code, 3);

    write("empty.json", R"({"vertex_count": 2, "edges": []})");
    EXPECT_EQ(run({"solve", "-g", path("empty.json"), "--feasible-set"}).code, 1);
}

TEST_F(Cli, JobsDoNotChangeMembers) {
    ASSERT_EQ(run({"gen", "petersen", "-o", path("g.json")}).code, 0);
    auto a = json::parse(run({"solve", "-g", path("g.json"), "--feasible-set", "--no-bounds"}).out);
    auto b = json::parse(run({"solve", "-g", path("g.json"), "--feasible-set", "--no-bounds", "--jobs", "3"}).out);
    EXPECT_EQ(a["members"], b["members"]);
    EXPECT_EQ(a["range"], json::parse("[3, 15]"));
    auto c = json::parse(run({"solve", "-g", path("g.json"), "--feasible-set", "--t-max", "4"}).out);
    EXPECT_EQ(c["range"], json::parse("[3, 4]"));
}

TEST_F(Cli, Bounds) {
    ASSERT_EQ(run({"gen", "complete", "7", "-o", path("k7.json")}).code, 0);
    auto r = run({"bounds", "-g", path("k7.json")});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["excluded_t"], "even");
    EXPECT_EQ(j["min_t"], 6);
    EXPECT_EQ(j["upper"][0]["value"], "not-applicable");
    auto t = run({"bounds", "-g", path("k7.json"), "--table"});
    EXPECT_NE(t.out.find("excluded t: even"), std::string::npos);
}

TEST_F(Cli, Certify) {
    ASSERT_EQ(run({"gen", "noncolorable", "--rule", "kstar", "--n", "2", "--m", "12", "-o", path("k.json"),
                   "--certificate", path("kc.json")})
                  .code,
              0);
    EXPECT_EQ(json::parse(slurp(path("kc.json")))["rule"], "kstar");
    auto r = run({"certify", "-g", path("k.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["verdict"], "noncolorable");

    ASSERT_EQ(run({"gen", "kstar", "1", "1", "-o", path("small.json")}).code, 0);
    auto w = run({"certify", "-g", path("small.json")});
    EXPECT_EQ(w.code, 1);
    EXPECT_EQ(json::parse(w.out)["verdict"], "colorable");

    ASSERT_EQ(run({"gen", "complete", "7", "-o", path("k7.json")}).code, 0);
    EXPECT_EQ(run({"certify", "-g", path("k7.json"), "--budget", "10"}).code, 3);
}

TEST_F(Cli, GenNoncolorable) {
    auto hat = run({"gen", "noncolorable", "--rule", "tree-hat", "--hubs", "10", "--leaves", "10"});
    EXPECT_EQ(hat.code, 0);
    EXPECT_EQ(graph_from_json(json::parse(hat.out)).vertex_count(), 112U);
    EXPECT_NE(hat.err.find("tree-hat"), std::string::npos);
    EXPECT_EQ(run({"gen", "noncolorable", "--rule", "tree-hat", "--hubs", "2", "--leaves", "2"}).code, 1);
    EXPECT_EQ(run({"gen", "noncolorable", "--rule", "kstar", "--n", "2", "--m", "5"}).code, 1);
    EXPECT_EQ(run({"gen", "noncolorable", "--degree", "12"}).code, 0);
    EXPECT_EQ(run({"gen", "noncolorable", "--degree", "7"}).code, 2);
    EXPECT_EQ(run({"gen", "noncolorable"}).code, 2);
}

TEST_F(Cli, TreesAndTreeHat) {
    auto r = run({"gen", "trees", "6", "-o", path("trees")});
    ASSERT_EQ(r.code, 0);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(path("trees")))
        ++files;
    EXPECT_EQ(files, 1U + 1 + 2 + 3 + 6);
    ASSERT_EQ(run({"gen", "star", "3", "-o", path("s.json")}).code, 0);
    auto h = run({"gen", "tree-hat", "-g", path("s.json")});
    ASSERT_EQ(h.code, 0);
    EXPECT_EQ(graph_from_json(json::parse(h.out)).edge_count(), 6U);
    ASSERT_EQ(run({"gen", "cycle", "4", "-o", path("c.json")}).code, 0);
    EXPECT_EQ(run({"gen", "tree-hat", "-g", path("c.json")}).code, 2);
}

TEST_F(Cli, Scan) {
    ASSERT_EQ(run({"gen", "trees", "5", "-o", path("corpus")}).code, 0);
    ASSERT_EQ(run({"gen", "petersen", "-o", path("corpus/petersen.json")}).code, 0);
    auto r = run({"scan", "--corpus", path("corpus")});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    ASSERT_EQ(j.size(), 8U);
    EXPECT_EQ(j[0]["name"], "petersen");
    EXPECT_EQ(j[0]["greatest"], 5);
    for (const auto& rec : j)
        EXPECT_FALSE(rec["counterexample"].get<bool>());
    EXPECT_EQ(run({"scan", "--corpus", path("nowhere")}).code, 2);
}

TEST_F(Cli, ExportDot) {
    ASSERT_EQ(run({"color", "tripartite", "1", "1", "3", "-o", path("g.json"), "-c", path("c.json")}).code, 0);
    auto r = run({"export-dot", "-g", path("g.json"), "-c", path("c.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("graph G {", 0), 0U);
    EXPECT_NE(r.out.find("label=\"5\""), std::string::npos);
    EXPECT_NE(r.out.find("color=\""), std::string::npos);
    auto plain = run({"export-dot", "-g", path("g.json"), "-o", path("g.dot")});
    EXPECT_EQ(plain.code, 0);
    EXPECT_EQ(slurp(path("g.dot")).find("label=\""), std::string::npos);
}

TEST(Io, FeasibleSetRoundTrip) {
    auto fs = feasible_set(make_cycle(6));
    auto back = feasible_set_from_json(to_json(fs));
    EXPECT_EQ(back.members, fs.members);
    EXPECT_EQ(back.t_lo, fs.t_lo);
    EXPECT_EQ(back.t_hi, fs.t_hi);
    EXPECT_EQ(back.exhausted, fs.exhausted);
    ASSERT_EQ(back.witnesses.size(), fs.witnesses.size());
    for (const auto& [t, c] : fs.witnesses)
        EXPECT_EQ(back.witnesses.at(t), c);
}

TEST(Io, LabelsSurvive) {
    Graph g = make_gdn(3, 4);
    auto back = graph_from_json(json::parse(dump(to_json(g))));
    EXPECT_EQ(back.labels(), g.labels());
    EXPECT_EQ(back.labels().front(), "v1");
}

TEST(Io, CertificateJson) {
    auto j = to_json(build_certified_kstar(2, 11).certificate);
    EXPECT_EQ(j["rule"], "kstar-511");
    EXPECT_TRUE(j["conclusive"].get<bool>());
    EXPECT_FALSE(j.contains("transcript"));
    auto rejected = to_json(build_certified_kstar(2, 5).certificate);
    EXPECT_TRUE(rejected["conclusion"].is_null());
}
