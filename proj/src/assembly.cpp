#include "dagcover/assembly.hpp"

#include <algorithm>
#include <tuple>

namespace dagcover {

AssembledDag assemble_gadget_dag(int graph_n, const Permutation& perm,
                                 const std::vector<VertexGadget>& gadgets) {
    AssembledDag out;
    SteinerDag& dag = out.dag;
    dag.graph_n = graph_n;
    dag.original_vertices.resize(graph_n);
    for (Vertex v = 0; v < graph_n; ++v) dag.original_vertices[v] = v;

    out.steiner_base.reserve(gadgets.size());
    int steiner_total = 0;
    for (const VertexGadget& g : gadgets) {
        out.steiner_base.push_back(steiner_total);
        steiner_total += g.steiner_points();
    }
    dag.steiner_count = steiner_total;

    for (size_t gi = 0; gi < gadgets.size(); ++gi) {
        const VertexGadget& g = gadgets[gi];
        for (size_t i = 1; i < g.members.size(); ++i)
            if (perm.position(g.members[i - 1]) >= perm.position(g.members[i]))
                throw input_error("gadget member order disagrees with the permutation");
        auto chain_ref = [&](int i) { return graph_n + out.steiner_base[gi] + i; };
        for (const auto& e : g.chain) dag.edges.push_back({chain_ref(e.i), chain_ref(e.i + 1), 0.0});
        for (const auto& e : g.from_center) dag.edges.push_back({chain_ref(e.i), g.members[e.i], e.w});
        for (const auto& e : g.to_center) dag.edges.push_back({g.members[e.i], chain_ref(e.i + 1), e.w});
    }

    // Sort key: (position of the owning member, originals after chain
    // nodes, gadget index, chain index). Chain node u_i sits strictly
    // between members i-1 and i of its gadget, so all edges respect
    // the resulting order.
    using Key = std::tuple<int, int, int, int>;
    std::vector<std::pair<Key, Vertex>> keyed;
    keyed.reserve(graph_n + steiner_total);
    for (Vertex v = 0; v < graph_n; ++v) keyed.push_back({{perm.position(v), 1, 0, 0}, v});
    for (size_t gi = 0; gi < gadgets.size(); ++gi) {
        const VertexGadget& g = gadgets[gi];
        for (int i = 0; i < g.steiner_points(); ++i)
            keyed.push_back({{perm.position(g.members[i]), 0, static_cast<int>(gi), i},
                             graph_n + out.steiner_base[gi] + i});
    }
    std::sort(keyed.begin(), keyed.end());
    dag.topo_order.reserve(keyed.size());
    for (const auto& [key, ref] : keyed) dag.topo_order.push_back(ref);
    return out;
}

}  // namespace dagcover
