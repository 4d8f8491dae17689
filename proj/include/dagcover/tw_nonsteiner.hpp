#pragma once

#include <cstdint>
#include <vector>

#include "dagcover/cover.hpp"
#include "dagcover/decomposition.hpp"
#include "dagcover/graph.hpp"

namespace dagcover {

/// Fixed-width binary codewords forming an antichain: for any two words
/// there are positions where the first has 0/1 and the second 1/0.
struct CodewordFamily {
    int length = 0;                       // 2 * ceil(log2(n+1)) bits
    std::vector<std::vector<int>> words;  // words[i][b] in {0,1}

    bool bit(int word, int b) const { return words[word][b] != 0; }
};

/// Word i (1-based i in [1, count]) is binary(i-1) concatenated with
/// binary(n-(i-1)), each field ceil(log2(n+1)) bits, most significant
/// first. Requires count <= n.
CodewordFamily make_codewords(int count, int n);

/// Exact non-Steiner cover with 2*ceil(log2(n+1)) DAGs: recursive
/// balanced-separator construction where each DAG routes components
/// before or after the bag according to its codeword bit, plus forward
/// (DAG 1) and backward (DAG 2) intra-bag edges. Added edges carry the
/// shortest-path distance of the recursion level's induced subgraph.
DagCover build_tw_nonsteiner_cover(const WeightedDigraph& g, const TreeDecomposition& td);

/// Dag count used for an n-vertex (sub)problem.
int nonsteiner_dag_count(int n);

}  // namespace dagcover
