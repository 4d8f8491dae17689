#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dagcover/graph.hpp"

namespace dagcover {

/// Tree decomposition: bags of vertex ids plus a tree over bag indices.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;          // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;    // bag-index pairs

    int width() const;
    int bag_count() const { return static_cast<int>(bags.size()); }
};

/// Path decomposition: bags in path order (the tree is implicit).
struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;

    int width() const;
    TreeDecomposition as_tree() const;
};

/// Per-property validation outcome with a human-readable witness.
struct ValidationReport {
    bool structure_ok = true;   // indices in range, edges form a tree
    bool coverage_ok = true;    // every vertex in some bag
    bool edges_ok = true;       // every graph edge inside some bag
    bool subtrees_ok = true;    // per-vertex bags connected in the tree
    std::string witness;        // first failure, empty when valid

    bool ok() const { return structure_ok && coverage_ok && edges_ok && subtrees_ok; }
};

/// Checks the three decomposition properties of td against the
/// underlying undirected graph of g. Out-of-range bag contents or a
/// non-tree edge set throw structural_error.
ValidationReport validate_decomposition(const WeightedDigraph& g, const TreeDecomposition& td);

/// Same checks for an arbitrary graph given as (vertex count, undirected
/// edge list); used for decompositions of cover DAGs.
ValidationReport validate_decomposition_of(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                           const TreeDecomposition& td);

/// Also requires every vertex to occupy a contiguous interval of bags.
ValidationReport validate_path_decomposition(int n,
                                             const std::vector<std::pair<Vertex, Vertex>>& edges,
                                             const PathDecomposition& pd);

/// Min-fill elimination ordering on the underlying undirected graph.
/// Always valid; width is heuristic (>= true treewidth).
TreeDecomposition heuristic_tree_decomposition(const WeightedDigraph& g);

/// A bag whose removal splits the active vertices into weakly connected
/// components of at most |active|/2 vertices each. Bags are read
/// restricted to `active`. Centroid-style walk from bag 0; throws
/// structural_error if the decomposition is inconsistent.
int find_balanced_bag(const TreeDecomposition& td, const std::vector<Vertex>& active);

/// Weakly connected components of the subgraph induced on active\bag,
/// ordered by smallest contained vertex id, each sorted.
std::vector<std::vector<Vertex>> restrict_components(const WeightedDigraph& g,
                                                     const std::vector<Vertex>& active,
                                                     const std::vector<Vertex>& bag);

}  // namespace dagcover
