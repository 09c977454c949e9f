#include "icc/bounds.hpp"
#include "icc/generators.hpp"
#include "icc/tree_enum.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace icc;

TEST(Bounds, TriangleFree) {
    EXPECT_EQ(bound_triangle_free(make_cycle(7)), 7);
    EXPECT_EQ(bound_triangle_free(make_hypercube(3)), 8 + 3 - 2);
    EXPECT_FALSE(bound_triangle_free(make_complete(4)));
    EXPECT_FALSE(bound_triangle_free(Graph(4, {{0, 1}, {2, 3}})));
}

TEST(Bounds, General) {
    EXPECT_EQ(bound_general(make_complete(2)), 1);
    EXPECT_EQ(bound_general(make_complete(3)), 3);
    EXPECT_EQ(bound_general(make_complete(5)), 2 * 5 + 4 - 5);
    EXPECT_FALSE(bound_general(Graph(1, {})));
}

TEST(Bounds, ShortestPathWeightMatchesPathEnumeration) {
    std::vector<Graph> gs{make_petersen(), make_fish(), make_gdn(3, 5), make_hypercube(3),
                          make_complete_tripartite(1, 2, 3), make_hub_tree(3, 3)};
    for (std::size_t n = 2; n <= 5; ++n)
        for (auto& g : oracle::connected_graphs(n))
            gs.push_back(g);
    for (const auto& g : gs)
        EXPECT_EQ(max_shortest_path_weight(g), oracle::max_shortest_path_weight(g));
    EXPECT_EQ(bound_shortest_paths(make_cycle(6)), 1 + 2 * 4);
}

TEST(Bounds, ShortestPathsWithinDiameterEstimate) {
    std::vector<Graph> gs{make_petersen(), make_fish(), make_gdn(4, 5), make_hypercube(4), make_hub_tree(4, 3)};
    for (std::size_t n = 2; n <= 5; ++n)
        for (auto& g : oracle::connected_graphs(n))
            gs.push_back(g);
    for (const auto& g : gs) {
        const auto diam = static_cast<long long>(*diameter(g));
        const auto delta = static_cast<long long>(g.max_degree());
        EXPECT_LE(*bound_shortest_paths(g), 1 + 2 * (diam + 1) * (delta - 1));
    }
}

TEST(Bounds, BipartiteDiameter) {
    EXPECT_EQ(bound_bipartite_diam(make_hypercube(3)), 1 + 2 * 3 * 2);
    EXPECT_EQ(bound_bipartite_diam(make_cycle(6)), 1 + 2 * 3 * 1);
    EXPECT_FALSE(bound_bipartite_diam(make_cycle(5)));
}

TEST(Bounds, ParityObstruction) {
    EXPECT_EQ(parity_obstruction(make_complete(7)), ExcludedT::even);
    EXPECT_EQ(parity_obstruction(make_complete_tripartite(1, 1, 3)), ExcludedT::even);
    EXPECT_EQ(parity_obstruction(make_cycle(5)), ExcludedT::even);
    EXPECT_EQ(parity_obstruction(make_cycle(6)), ExcludedT::none);
    EXPECT_EQ(parity_obstruction(make_complete(5)), ExcludedT::none);
    EXPECT_TRUE(excluded(ExcludedT::even, 8));
    EXPECT_FALSE(excluded(ExcludedT::even, 7));
}

TEST(Bounds, CycleFeasibleSets) {
    EXPECT_EQ(cycle_feasible_set(5), (std::vector<Color>{3, 5}));
    EXPECT_EQ(cycle_feasible_set(4), (std::vector<Color>{2, 3, 4}));
    EXPECT_EQ(cycle_feasible_set(6), (std::vector<Color>{2, 3, 4, 6}));
    EXPECT_EQ(cycle_feasible_set(8), (std::vector<Color>{2, 3, 4, 5, 6, 8}));
    EXPECT_THROW(cycle_feasible_set(2), invalid_parameter);
}

TEST(Bounds, TreeLpMatchesDefinition) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (const auto& t : all_trees(n)) {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    EXPECT_EQ(tree_lp(t, u, v), oracle::lp(t, u, v));
            EXPECT_EQ(tree_m(t), oracle::tree_m(t));
        }
}

TEST(Bounds, PathM) {
    for (std::size_t m = 2; m <= 12; ++m)
        EXPECT_EQ(tree_m(make_path(m)), static_cast<long long>(m - 1));
}

TEST(Bounds, TreeFeasibleSet) {
    EXPECT_EQ(tree_feasible_set(make_path(5)), (std::pair<Color, Color>{2, 4}));
    EXPECT_EQ(tree_feasible_set(make_star(6)), (std::pair<Color, Color>{6, 6}));
    EXPECT_EQ(tree_m(make_hub_tree(10, 10)), 30);
    EXPECT_THROW(tree_m(make_cycle(4)), not_a_tree);
    EXPECT_THROW(tree_lp(make_path(3), 1, 1), invalid_parameter);
}

TEST(Bounds, K2nIntervalBound) {
    // n = p 2^q with p odd: 4n - 2 - p - q
    EXPECT_EQ(k2n_interval_bound(1), 1);
    EXPECT_EQ(k2n_interval_bound(2), 4);
    EXPECT_EQ(k2n_interval_bound(3), 7);
    EXPECT_EQ(k2n_interval_bound(4), 11);
    EXPECT_EQ(k2n_interval_bound(6), 22 - 3 - 1);
    EXPECT_THROW(k2n_interval_bound(0), invalid_parameter);
}

TEST(Bounds, ReportNamesPremises) {
    auto r = report(make_complete(4));
    ASSERT_EQ(r.upper.size(), 5U);
    EXPECT_FALSE(r.upper[0].value);
    EXPECT_EQ(r.upper[1].value, 2 * 4 + 3 - 5);
    EXPECT_EQ(r.min_t, 3);
    EXPECT_EQ(r.best_upper, 6);
    EXPECT_EQ(r.excluded_t, ExcludedT::none);
    ASSERT_EQ(r.lower.size(), 1U);
    EXPECT_EQ(r.lower[0].value, k2n_interval_bound(2));
}

TEST(Bounds, ReportRecognizesFamilies) {
    auto star = report(make_star(5));
    bool saw_bip = false, saw_tree = false;
    for (const auto& e : star.lower) {
        if (e.name == "complete_bipartite") {
            saw_bip = true;
            EXPECT_EQ(e.value, 5);
        }
        if (e.name == "tree_exact") {
            saw_tree = true;
            EXPECT_EQ(e.value, 5);
        }
    }
    EXPECT_TRUE(saw_bip && saw_tree);
    auto k7 = report(make_complete(7));
    EXPECT_EQ(k7.excluded_t, ExcludedT::even);
    EXPECT_EQ(k7.lower.at(0).value, 9);
}

TEST(Bounds, WorkedValues) {
    EXPECT_EQ(tree_lp(make_path(5), 0, 4), 4);
    Graph star = make_star(4);
    EXPECT_EQ(tree_lp(star, 1, 2), 4);
    EXPECT_EQ(tree_m(star), 4);
    Graph ds = make_double_star(3, 3);
    long long across = 0;
    for (Vertex a : leaves(ds))
        for (Vertex b : leaves(ds))
            if (a != b && bfs_distances(ds, a)[b] == 3)
                across = std::max(across, tree_lp(ds, a, b));
    EXPECT_EQ(across, 7);
    EXPECT_EQ(tree_feasible_set(make_star(3)), (std::pair<Color, Color>{3, 3}));

    EXPECT_EQ(bound_shortest_paths(make_cycle(5)), 7);
    EXPECT_EQ(bound_shortest_paths(make_path(3)), 3);
    for (long long n = 2; n <= 6; ++n)
        EXPECT_EQ(bound_bipartite_diam(make_hypercube(static_cast<std::size_t>(n))), 2 * n * n - 2 * n + 1);

    EXPECT_EQ(report(make_cycle(5)).best_upper, 5);
    EXPECT_EQ(report(make_hypercube(3)).best_upper, 9);
    auto k = report(make_kstar(2, 11));
    EXPECT_EQ(k.excluded_t, ExcludedT::none);
    EXPECT_LE(k.best_upper, static_cast<long long>(make_kstar(2, 11).edge_count()));
}
