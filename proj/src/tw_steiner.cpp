#include "dagcover/tw_steiner.hpp"

#include <algorithm>

#include "dagcover/assembly.hpp"
#include "dagcover/gadget.hpp"

namespace dagcover {

namespace {

void build_recursion(const WeightedDigraph& g, const TreeDecomposition& td,
                     std::vector<Vertex> active, SeparatorNode& node,
                     std::vector<Vertex>& order_out) {
    std::sort(active.begin(), active.end());
    node.active = active;
    int bag_idx = find_balanced_bag(td, active);
    const auto& full_bag = td.bags[bag_idx];
    for (Vertex v : active)
        if (std::binary_search(full_bag.begin(), full_bag.end(), v)) node.bag.push_back(v);
    for (Vertex v : node.bag) order_out.push_back(v);
    auto comps = restrict_components(g, active, node.bag);
    node.children.resize(comps.size());
    for (size_t i = 0; i < comps.size(); ++i)
        build_recursion(g, td, comps[i], node.children[i], order_out);
}

void collect_gadgets(const WeightedDigraph& g, const SeparatorNode& node, const Permutation& perm,
                     std::vector<VertexGadget>& gadgets) {
    if (node.active.size() >= 2) {
        std::vector<Vertex> members = node.active;
        std::sort(members.begin(), members.end(),
                  [&](Vertex a, Vertex b) { return perm.position(a) < perm.position(b); });
        for (Vertex x : node.bag) {
            std::vector<Weight> to_x = induced_target_distances(g, node.active, x);
            std::vector<Weight> from_x = induced_source_distances(g, node.active, x);
            gadgets.push_back(build_vertex_gadget(to_x, from_x, members, x));
        }
    }
    for (const SeparatorNode& child : node.children) collect_gadgets(g, child, perm, gadgets);
}

struct DagWithDecomposition {
    SteinerDag dag;
    PathDecomposition pd;
};

DagWithDecomposition build_one_dag(const WeightedDigraph& g, const SeparatorNode& root,
                                   const Permutation& perm) {
    std::vector<VertexGadget> gadgets;
    collect_gadgets(g, root, perm, gadgets);
    AssembledDag assembled = assemble_gadget_dag(g.n(), perm, gadgets);

    // One bag per original vertex in permutation order. The bag of the
    // i-th member of a gadget holds its chain nodes u_i and u_{i+1};
    // members of one gadget occupy consecutive positions, so every chain
    // node lands in two adjacent bags.
    std::vector<std::vector<Vertex>> bag_of(g.n());
    for (Vertex v = 0; v < g.n(); ++v) bag_of[v].push_back(v);
    for (size_t gi = 0; gi < gadgets.size(); ++gi) {
        const VertexGadget& gd = gadgets[gi];
        auto chain_ref = [&](int i) { return g.n() + assembled.steiner_base[gi] + i; };
        const int a = gd.steiner_points();
        for (int i = 0; i < a; ++i) {
            bag_of[gd.members[i]].push_back(chain_ref(i));
            if (i + 1 < a) bag_of[gd.members[i]].push_back(chain_ref(i + 1));
        }
    }
    DagWithDecomposition out;
    out.dag = std::move(assembled.dag);
    out.pd.bags.reserve(g.n());
    for (int p = 0; p < g.n(); ++p) {
        std::vector<Vertex>& bag = bag_of[perm.order[p]];
        std::sort(bag.begin(), bag.end());
        out.pd.bags.push_back(std::move(bag));
    }
    return out;
}

}  // namespace

PathwidthFriendlyOrder pathwidth_friendly_permutation(const WeightedDigraph& g,
                                                      const TreeDecomposition& td) {
    ValidationReport rep = validate_decomposition(g, td);
    if (!rep.ok()) throw structural_error("invalid tree decomposition: " + rep.witness);
    PathwidthFriendlyOrder out;
    std::vector<Vertex> order;
    order.reserve(g.n());
    if (g.n() > 0) {
        std::vector<Vertex> all(g.n());
        for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
        build_recursion(g, td, all, out.tree.root, order);
    }
    out.perm = Permutation::from_order(std::move(order));
    return out;
}

TwSteinerCover build_tw_steiner_cover(const WeightedDigraph& g, const TreeDecomposition& td,
                                      const PathwidthFriendlyOrder& order) {
    TwSteinerCover result;
    Permutation sigma = order.perm;
    Permutation sigma_rev = sigma.reversed();

    DagWithDecomposition fwd = build_one_dag(g, order.tree.root, sigma);
    DagWithDecomposition bwd = build_one_dag(g, order.tree.root, sigma_rev);

    result.cover.dags.push_back(std::move(fwd.dag));
    result.cover.dags.push_back(std::move(bwd.dag));
    result.cover.stretch_target = 1.0;
    result.cover.steiner = true;
    result.cover.provenance.construction = "tw-steiner";
    result.cover.provenance.parameters["width"] = std::to_string(td.width());
    result.path_decs.push_back(std::move(fwd.pd));
    result.path_decs.push_back(std::move(bwd.pd));
    return result;
}

}  // namespace dagcover
