#pragma once

#include <set>
#include <vector>

#include "dagcover/cover.hpp"
#include "dagcover/graph.hpp"
#include "dagcover/path_cover.hpp"
#include "dagcover/planar.hpp"

namespace dagcover {

/// Binary hierarchy over a path: each node is an interval with its
/// centroid; children are the strict prefix and suffix around it.
struct CentroidHierarchy {
    struct Node {
        int lo = 0, hi = 0;   // interval [lo, hi) of path positions
        int centroid = 0;     // position; predecessor/successor counts differ <= 1
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;  // nodes[0] is the root

    int depth() const;
    /// Node indices of all subpaths containing a position, root first.
    std::vector<int> subpaths_containing(int pos) const;
    /// Deepest node containing both positions (its centroid lies between
    /// them); this is the maximal common subpath of the two.
    int max_common_subpath(int pos_a, int pos_b) const;
};

CentroidHierarchy build_centroid_hierarchy(int path_length);

/// X_v = { centroid of P' : P in P[v], y in C(v,P), P' in Q(y,P) } built
/// by the nested loop over the path cover; sets are over vertex ids.
std::vector<std::set<Vertex>> assemble_center_sets(const PathCover& pc,
                                                   const std::vector<CentroidHierarchy>& hierarchies);

struct PlanarCoverResult {
    DagCover cover;  // 2 dags, stretch target 1 + eps
    PathCover path_cover;
    std::vector<CentroidHierarchy> hierarchies;      // one per path
    std::vector<std::set<Vertex>> center_sets;       // X_v per vertex
    std::vector<std::vector<Vertex>> member_sets;    // A_x per center (sorted)
};

/// (1+eps, 2, ~) Steiner cover of a planar digraph: path cover, centroid
/// hierarchies, X_v / A_x inversion, one vertex gadget per center over
/// A_x with global distances, unioned under vertex-id order sigma and
/// its reverse.
PlanarCoverResult build_planar_cover(const WeightedDigraph& g, const PlanarEmbedding& emb,
                                     double eps);

}  // namespace dagcover
