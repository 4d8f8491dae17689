#pragma once

#include <cstdint>
#include <optional>

#include "dagcover/decomposition.hpp"
#include "dagcover/graph.hpp"
#include "dagcover/planar.hpp"

namespace dagcover {

// Deterministic generator RNG (splitmix64). Distribution helpers avoid
// <random> distributions so outputs are identical across standard
// library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }
    // Uniform-ish real in [lo, hi] with 4 decimal digits of granularity.
    double real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() % 10001) / 10000.0);
    }
    bool chance(double p) { return real(0.0, 1.0) < p; }

private:
    uint64_t state_;
};

/// Unweighted bidirected star on n vertices: root 0, leaves 1..n-1,
/// edges (0,v) and (v,0) with weight 1. Requires n >= 2.
WeightedDigraph make_bidirected_star(int n);

/// Width-1 tree decomposition of the star: bag {0} plus one bag {0, v}
/// per leaf, all attached to the root bag.
TreeDecomposition star_tree_decomposition(int n);

struct KTreeInstance {
    WeightedDigraph graph;
    TreeDecomposition td;  // natural decomposition, width k
};

/// Random partial k-tree: random k-tree skeleton, each skeleton edge
/// kept with probability keep_prob, then oriented forward / backward /
/// bidirected uniformly, weights uniform in [1, max_weight].
KTreeInstance make_random_partial_ktree(int n, int k, uint64_t seed, double keep_prob = 0.75,
                                        double max_weight = 8.0);

struct PlanarInstance {
    WeightedDigraph graph;
    PlanarEmbedding embedding;
};

/// Bidirected rows x cols grid with independent random weights in
/// [1, max_weight] per direction and the natural rotation system.
PlanarInstance make_grid(int rows, int cols, uint64_t seed, double max_weight = 4.0);

/// Single directed cycle 0 -> 1 -> ... -> n-1 -> 0 with random weights
/// in [1, max_weight] (max_weight = 1 gives the unit cycle).
PlanarInstance make_dicycle(int n, uint64_t seed, double max_weight = 1.0);

/// Arbitrary random digraph (for oracle-style tests): each ordered pair
/// becomes an edge with probability density, weight uniform [1, max_weight].
WeightedDigraph make_random_digraph(int n, double density, uint64_t seed,
                                    double max_weight = 8.0);

}  // namespace dagcover
