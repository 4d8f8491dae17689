#pragma once

#include <string>
#include <vector>

#include "dagcover/cover.hpp"
#include "dagcover/graph.hpp"

namespace dagcover {

/// Lower bound on the number of DAGs any non-Steiner cover of the
/// n-vertex bidirected star with stretch < 2 and mu extra edges needs:
/// log2((n-1)^2 / (2*mu + n - 1) + 1).
double star_lower_bound(int n, int64_t mu);

struct StarCoverAnalysis {
    int n = 0;
    int dag_count = 0;
    int64_t mu = 0;                        // measured extra edges
    double bound = 0.0;                    // star_lower_bound(n, mu)
    std::vector<std::vector<int>> codewords;  // per leaf (index 1..n-1), bit per dag
    std::vector<std::pair<Vertex, Vertex>> q_pairs;  // leaf pairs with no direct edge
    bool consistent = false;
    std::string counterexample;            // nonempty if the bound logic failed
};

/// Extracts per-leaf codewords (bit k = 1 iff dag k has edge (leaf, rt)),
/// builds the pair set Q, checks codeword distinctness on Q and the
/// g >= bound inequality. The cover must be non-Steiner and certified
/// with stretch target < 2 over the n-vertex bidirected star; otherwise
/// input_error is thrown.
StarCoverAnalysis analyze_star_cover(int n, const DagCover& cover);

}  // namespace dagcover
