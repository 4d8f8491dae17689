#include "dagcover/gadget.hpp"

#include <algorithm>

namespace dagcover {

VertexGadget build_vertex_gadget(const std::vector<Weight>& dist_to_x,
                                 const std::vector<Weight>& dist_from_x,
                                 const std::vector<Vertex>& members, Vertex center) {
    if (members.empty()) throw input_error("gadget needs at least one member");
    const int max_id = static_cast<int>(std::min(dist_to_x.size(), dist_from_x.size()));
    if (center < 0 || center >= max_id)
        throw input_error("center missing from distance vectors");
    for (Vertex v : members)
        if (v < 0 || v >= max_id) throw input_error("member missing from distance vectors");

    VertexGadget gadget;
    gadget.center = center;
    gadget.members = members;
    const int a = static_cast<int>(members.size());
    for (int i = 0; i < a; ++i) {
        if (i + 1 < a) gadget.chain.push_back({i});
        if (reachable(dist_from_x[members[i]]))
            gadget.from_center.push_back({i, dist_from_x[members[i]]});
        if (i + 1 < a && reachable(dist_to_x[members[i]]))
            gadget.to_center.push_back({i, dist_to_x[members[i]]});
    }
    return gadget;
}

SteinerDag gadget_to_dag(const VertexGadget& gadget, int graph_n) {
    SteinerDag dag;
    dag.graph_n = graph_n;
    dag.original_vertices = gadget.members;
    std::sort(dag.original_vertices.begin(), dag.original_vertices.end());
    const int a = gadget.steiner_points();
    dag.steiner_count = a;
    auto chain_ref = [&](int i) { return graph_n + i; };
    for (const auto& e : gadget.chain) dag.edges.push_back({chain_ref(e.i), chain_ref(e.i + 1), 0.0});
    for (const auto& e : gadget.from_center)
        dag.edges.push_back({chain_ref(e.i), gadget.members[e.i], e.w});
    for (const auto& e : gadget.to_center)
        dag.edges.push_back({gadget.members[e.i], chain_ref(e.i + 1), e.w});
    dag.topo_order.reserve(2 * a);
    for (int i = 0; i < a; ++i) {
        dag.topo_order.push_back(chain_ref(i));
        dag.topo_order.push_back(gadget.members[i]);
    }
    return dag;
}

}  // namespace dagcover
