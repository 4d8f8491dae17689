#include "dagcover/generators.hpp"

#include <algorithm>
#include <set>

namespace dagcover {

WeightedDigraph make_bidirected_star(int n) {
    if (n < 2) throw input_error("bidirected star needs at least 2 vertices");
    std::vector<Edge> edges;
    edges.reserve(2 * (n - 1));
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({0, v, 1.0});
        edges.push_back({v, 0, 1.0});
    }
    return WeightedDigraph(n, std::move(edges));
}

TreeDecomposition star_tree_decomposition(int n) {
    TreeDecomposition td;
    td.bags.push_back({0});
    for (Vertex v = 1; v < n; ++v) {
        td.bags.push_back({0, v});
        td.tree_edges.emplace_back(0, static_cast<int>(td.bags.size()) - 1);
    }
    return td;
}

namespace {

// Orientation draw: 0 forward, 1 backward, 2 bidirected.
void emit_oriented(std::vector<Edge>& edges, Rng& rng, Vertex a, Vertex b, double max_weight) {
    int mode = static_cast<int>(rng.below(3));
    if (mode == 0 || mode == 2) edges.push_back({a, b, rng.real(1.0, max_weight)});
    if (mode == 1 || mode == 2) edges.push_back({b, a, rng.real(1.0, max_weight)});
}

}  // namespace

KTreeInstance make_random_partial_ktree(int n, int k, uint64_t seed, double keep_prob,
                                        double max_weight) {
    if (k < 1 || n < k + 1) throw input_error("k-tree needs n >= k+1 and k >= 1");
    Rng rng(seed);

    // Skeleton: initial (k+1)-clique, then each vertex adjoins a random
    // k-clique of an existing bag.
    std::vector<std::pair<Vertex, Vertex>> skeleton;
    std::vector<std::vector<Vertex>> cliques;  // candidate k-cliques
    std::vector<int> clique_home;              // bag index the clique came from

    TreeDecomposition td;
    std::vector<Vertex> base(k + 1);
    for (int i = 0; i <= k; ++i) base[i] = i;
    td.bags.push_back(base);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) skeleton.emplace_back(i, j);
    for (int drop = 0; drop <= k; ++drop) {
        std::vector<Vertex> c;
        for (int i = 0; i <= k; ++i)
            if (i != drop) c.push_back(i);
        cliques.push_back(c);
        clique_home.push_back(0);
    }

    for (Vertex v = k + 1; v < n; ++v) {
        int pick = static_cast<int>(rng.below(cliques.size()));
        const std::vector<Vertex> attach = cliques[pick];
        for (Vertex u : attach) skeleton.emplace_back(u, v);
        std::vector<Vertex> bag = attach;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        int bag_idx = static_cast<int>(td.bags.size()) - 1;
        td.tree_edges.emplace_back(clique_home[pick], bag_idx);
        // New candidate cliques: swap each attach vertex for v.
        for (size_t i = 0; i < attach.size(); ++i) {
            std::vector<Vertex> c = attach;
            c[i] = v;
            std::sort(c.begin(), c.end());
            cliques.push_back(c);
            clique_home.push_back(bag_idx);
        }
    }

    std::vector<Edge> edges;
    for (const auto& [a, b] : skeleton) {
        if (!rng.chance(keep_prob)) continue;
        emit_oriented(edges, rng, a, b, max_weight);
    }
    return {WeightedDigraph(n, std::move(edges)), std::move(td)};
}

PlanarInstance make_grid(int rows, int cols, uint64_t seed, double max_weight) {
    if (rows < 1 || cols < 1) throw input_error("grid dimensions must be positive");
    Rng rng(seed);
    const int n = rows * cols;
    auto id = [&](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                edges.push_back({id(r, c), id(r, c + 1), rng.real(1.0, max_weight)});
                edges.push_back({id(r, c + 1), id(r, c), rng.real(1.0, max_weight)});
            }
            if (r + 1 < rows) {
                edges.push_back({id(r, c), id(r + 1, c), rng.real(1.0, max_weight)});
                edges.push_back({id(r + 1, c), id(r, c), rng.real(1.0, max_weight)});
            }
        }
    PlanarEmbedding emb;
    emb.rotation.resize(n);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& rot = emb.rotation[id(r, c)];
            if (r > 0) rot.push_back(id(r - 1, c));
            if (c + 1 < cols) rot.push_back(id(r, c + 1));
            if (r + 1 < rows) rot.push_back(id(r + 1, c));
            if (c > 0) rot.push_back(id(r, c - 1));
        }
    return {WeightedDigraph(n, std::move(edges)), std::move(emb)};
}

PlanarInstance make_dicycle(int n, uint64_t seed, double max_weight) {
    if (n < 3) throw input_error("directed cycle needs at least 3 vertices");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n, max_weight <= 1.0 ? 1.0 : rng.real(1.0, max_weight)});
    PlanarEmbedding emb;
    emb.rotation.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        emb.rotation[v].push_back((v + n - 1) % n);
        emb.rotation[v].push_back((v + 1) % n);
    }
    return {WeightedDigraph(n, std::move(edges)), std::move(emb)};
}

WeightedDigraph make_random_digraph(int n, double density, uint64_t seed, double max_weight) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.chance(density)) edges.push_back({u, v, rng.real(1.0, max_weight)});
    return WeightedDigraph(n, std::move(edges));
}

}  // namespace dagcover
