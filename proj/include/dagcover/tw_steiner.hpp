#pragma once

#include <vector>

#include "dagcover/cover.hpp"
#include "dagcover/decomposition.hpp"
#include "dagcover/graph.hpp"

namespace dagcover {

/// One node of the balanced-separator recursion: the active vertex set,
/// the chosen separator bag restricted to it, and one child per weakly
/// connected component of active minus bag.
struct SeparatorNode {
    std::vector<Vertex> active;  // sorted
    std::vector<Vertex> bag;     // sorted, subset of active
    std::vector<SeparatorNode> children;
};

struct SeparatorTree {
    SeparatorNode root;
};

struct PathwidthFriendlyOrder {
    Permutation perm;
    SeparatorTree tree;
};

/// Permutation in which, at every recursion node, the separator bag
/// comes first and each component's vertices form a contiguous block,
/// recursively. The recursion tree is returned for reuse by the builder.
PathwidthFriendlyOrder pathwidth_friendly_permutation(const WeightedDigraph& g,
                                                      const TreeDecomposition& td);

struct TwSteinerCover {
    DagCover cover;                           // exactly 2 dags
    std::vector<PathDecomposition> path_decs;  // one per dag, in dag order
};

/// Exact 2-DAG Steiner cover: per recursion node, one vertex gadget per
/// bag vertex over the node's active set (distances inside the induced
/// active subgraph), unioned under sigma and under its reverse. Also
/// emits a path decomposition of each dag.
TwSteinerCover build_tw_steiner_cover(const WeightedDigraph& g, const TreeDecomposition& td,
                                      const PathwidthFriendlyOrder& order);

}  // namespace dagcover
