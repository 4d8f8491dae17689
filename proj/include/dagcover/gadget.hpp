#pragma once

#include <vector>

#include "dagcover/cover.hpp"
#include "dagcover/graph.hpp"

namespace dagcover {

/// One center's DAG: a zero-weight Steiner chain u_1..u_|A| threaded
/// between the members, realizing every through-center shortest path
/// that respects the member order.
struct VertexGadget {
    Vertex center = 0;
    std::vector<Vertex> members;  // in the designated order
    // Edge categories over local indices i = 0..|A|-1:
    //   chain:      (u_i, u_{i+1})   weight 0,            i < |A|-1
    //   from_center:(u_i, v_i)       weight d(center, v_i) when finite
    //   to_center:  (v_i, u_{i+1})   weight d(v_i, center) when finite, i < |A|-1
    struct ChainEdge { int i; };
    struct FromCenterEdge { int i; Weight w; };
    struct ToCenterEdge { int i; Weight w; };
    std::vector<ChainEdge> chain;
    std::vector<FromCenterEdge> from_center;
    std::vector<ToCenterEdge> to_center;

    int steiner_points() const { return static_cast<int>(members.size()); }
    int edge_count() const {
        return static_cast<int>(chain.size() + from_center.size() + to_center.size());
    }
};

/// Builds the gadget from precomputed distance vectors (indexed by
/// global vertex id): dist_to_x[v] = d(v, x), dist_from_x[v] = d(x, v).
/// The center need not be a member. Members must appear in the desired
/// topological order.
VertexGadget build_vertex_gadget(const std::vector<Weight>& dist_to_x,
                                 const std::vector<Weight>& dist_from_x,
                                 const std::vector<Vertex>& members, Vertex center);

/// Materializes a single gadget as a standalone SteinerDag over graph_n
/// original ids (for direct inspection and tests).
SteinerDag gadget_to_dag(const VertexGadget& gadget, int graph_n);

}  // namespace dagcover
