#include <doctest.h>

#include "dagcover/generators.hpp"
#include "dagcover/planar.hpp"

using namespace dagcover;

TEST_CASE("5x5 grid embedding passes with 17 faces") {
    PlanarInstance inst = make_grid(5, 5, 3);
    EmbeddingReport rep = validate_embedding(inst.graph, inst.embedding);
    CHECK(rep.ok);
    CHECK(rep.faces == 17);  // 16 inner + outer
}

TEST_CASE("triangle embedding passes with 2 faces") {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 3; ++v) {
        edges.push_back({v, (v + 1) % 3, 1.0});
        edges.push_back({(v + 1) % 3, v, 1.0});
    }
    WeightedDigraph g(3, edges);
    PlanarEmbedding emb;
    emb.rotation = {{1, 2}, {2, 0}, {0, 1}};
    EmbeddingReport rep = validate_embedding(g, emb);
    CHECK(rep.ok);
    CHECK(rep.faces == 2);
}

TEST_CASE("K5 fails the Euler check for any rotation") {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v)
            if (u != v) edges.push_back({u, v, 1.0});
    WeightedDigraph g(5, edges);
    PlanarEmbedding emb;
    emb.rotation.resize(5);
    for (Vertex v = 0; v < 5; ++v)
        for (Vertex w = 0; w < 5; ++w)
            if (w != v) emb.rotation[v].push_back(w);
    EmbeddingReport rep = validate_embedding(g, emb);
    CHECK(!rep.ok);
    CHECK(!rep.witness.empty());
}

TEST_CASE("rotation lists inconsistent with the edge set are structural errors") {
    WeightedDigraph g(3, {{0, 1, 1.0}, {1, 0, 1.0}});
    PlanarEmbedding emb;
    emb.rotation = {{1, 2}, {0}, {}};  // vertex 0 lists a non-neighbor
    CHECK_THROWS_AS(validate_embedding(g, emb), structural_error);
}

TEST_CASE("2x2 grid: 4 vertices, 8 directed edges, valid embedding") {
    PlanarInstance inst = make_grid(2, 2, 1);
    CHECK(inst.graph.n() == 4);
    CHECK(inst.graph.m() == 8);
    CHECK(validate_embedding(inst.graph, inst.embedding).ok);
}

TEST_CASE("dicycle embedding is planar with 2 faces per cycle") {
    PlanarInstance inst = make_dicycle(12, 1);
    EmbeddingReport rep = validate_embedding(inst.graph, inst.embedding);
    CHECK(rep.ok);
    CHECK(rep.faces == 2);
}

TEST_CASE("disconnected graphs validate per component") {
    // Two disjoint bidirected triangles.
    std::vector<Edge> edges;
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i) {
            Vertex a = base + i, b = base + (i + 1) % 3;
            edges.push_back({a, b, 1.0});
            edges.push_back({b, a, 1.0});
        }
    WeightedDigraph g(6, edges);
    PlanarEmbedding emb;
    emb.rotation = {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}};
    EmbeddingReport rep = validate_embedding(g, emb);
    CHECK(rep.ok);
    CHECK(rep.faces == 4);
}
