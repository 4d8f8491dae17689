#include <doctest.h>

#include <cmath>

#include "dagcover/generators.hpp"
#include "dagcover/star_bound.hpp"
#include "dagcover/tw_nonsteiner.hpp"

using namespace dagcover;

TEST_CASE("bidirected star shape") {
    WeightedDigraph s7 = make_bidirected_star(7);
    CHECK(s7.n() == 7);
    CHECK(s7.m() == 12);
    WeightedDigraph s2 = make_bidirected_star(2);
    CHECK(s2.m() == 2);
    CHECK_THROWS_AS(make_bidirected_star(1), input_error);
    DistanceMatrix d = all_pairs_distances(make_bidirected_star(9));
    for (Vertex i = 1; i < 9; ++i) {
        CHECK(d(i, 0) == 1.0);
        for (Vertex j = 1; j < 9; ++j)
            if (i != j) CHECK(d(i, j) == 2.0);
    }
}

TEST_CASE("lower bound formula values") {
    CHECK(star_lower_bound(5, 0) == doctest::Approx(std::log2(5.0)).epsilon(1e-12));
    CHECK(star_lower_bound(2, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(star_lower_bound(101, 0) == doctest::Approx(std::log2(101.0)).epsilon(1e-12));
}

TEST_CASE("bound is monotone: decreasing in mu, increasing in n") {
    for (int n : {4, 16, 64})
        for (int64_t mu = 0; mu < 40; mu += 7)
            CHECK(star_lower_bound(n, mu) >= star_lower_bound(n, mu + 1));
    for (int n = 3; n < 60; ++n) CHECK(star_lower_bound(n + 1, 5) >= star_lower_bound(n, 5));
}

TEST_CASE("layered star covers are consistent with the counting bound") {
    for (int n : {8, 16, 32}) {
        WeightedDigraph star = make_bidirected_star(n);
        DagCover cover = build_tw_nonsteiner_cover(star, star_tree_decomposition(n));
        StarCoverAnalysis res = analyze_star_cover(n, cover);
        CHECK(res.consistent);
        CHECK(res.counterexample.empty());
        CHECK(res.mu == 0);
        CHECK(static_cast<double>(res.dag_count) >= res.bound);
        // Codewords on Q pairs are pairwise distinct.
        for (const auto& [i, j] : res.q_pairs) CHECK(res.codewords[i] != res.codewords[j]);
        // With mu = 0, Q is every leaf pair.
        CHECK(static_cast<int64_t>(res.q_pairs.size()) ==
              static_cast<int64_t>(n - 1) * (n - 2) / 2);
    }
}

TEST_CASE("stretch-violating covers are rejected before analysis") {
    const int n = 6;
    // One dag, correct distances only in one direction: certification fails.
    DagCover cover;
    SteinerDag dag;
    dag.graph_n = n;
    for (Vertex v = 0; v < n; ++v) {
        dag.original_vertices.push_back(v);
        dag.topo_order.push_back(v);
    }
    for (Vertex v = 1; v < n; ++v) dag.edges.push_back({0, v, 1.0});
    cover.dags.push_back(dag);
    cover.stretch_target = 1.0;
    CHECK_THROWS_AS(analyze_star_cover(n, cover), input_error);
}

TEST_CASE("steiner covers and t >= 2 covers are rejected") {
    const int n = 5;
    DagCover cover;
    cover.stretch_target = 2.0;
    CHECK_THROWS_AS(analyze_star_cover(n, cover), input_error);
    cover.stretch_target = 1.0;
    cover.steiner = true;
    CHECK_THROWS_AS(analyze_star_cover(n, cover), input_error);
}

TEST_CASE("a dense direct-edge cover is consistent with a tiny bound") {
    const int n = 6;
    // Dag 1: identity order, edges rt->leaf (1), leaf i -> leaf j for
    // i < j (2). Dag 2: everything reversed.
    DagCover cover;
    for (int which = 0; which < 2; ++which) {
        SteinerDag dag;
        dag.graph_n = n;
        for (Vertex v = 0; v < n; ++v) dag.original_vertices.push_back(v);
        if (which == 0) {
            for (Vertex v = 0; v < n; ++v) dag.topo_order.push_back(v);
            for (Vertex v = 1; v < n; ++v) dag.edges.push_back({0, v, 1.0});
            for (Vertex i = 1; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) dag.edges.push_back({i, j, 2.0});
        } else {
            for (Vertex v = n - 1; v >= 0; --v) dag.topo_order.push_back(v);
            for (Vertex v = 1; v < n; ++v) dag.edges.push_back({v, 0, 1.0});
            for (Vertex i = 1; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) dag.edges.push_back({j, i, 2.0});
        }
        cover.dags.push_back(std::move(dag));
    }
    cover.stretch_target = 1.0;
    StarCoverAnalysis res = analyze_star_cover(n, cover);
    CHECK(res.consistent);
    CHECK(res.q_pairs.empty());       // every leaf pair has a direct edge
    CHECK(res.bound < 2.0);           // log2(25/45 + 1) < 1
    CHECK(res.mu == static_cast<int64_t>(n - 1) * (n - 2));
}
