#include "dagcover/planar_cover.hpp"

#include <algorithm>

#include "dagcover/assembly.hpp"
#include "dagcover/gadget.hpp"

namespace dagcover {

namespace {

int build_nodes(CentroidHierarchy& h, int lo, int hi) {
    if (lo >= hi) return -1;
    CentroidHierarchy::Node node;
    node.lo = lo;
    node.hi = hi;
    node.centroid = lo + (hi - lo - 1) / 2;  // earlier middle on even length
    int idx = static_cast<int>(h.nodes.size());
    h.nodes.push_back(node);
    int left = build_nodes(h, lo, h.nodes[idx].centroid);
    int right = build_nodes(h, h.nodes[idx].centroid + 1, hi);
    h.nodes[idx].left = left;
    h.nodes[idx].right = right;
    return idx;
}

}  // namespace

CentroidHierarchy build_centroid_hierarchy(int path_length) {
    if (path_length < 1) throw input_error("path must be nonempty");
    CentroidHierarchy h;
    build_nodes(h, 0, path_length);
    return h;
}

int CentroidHierarchy::depth() const {
    std::vector<int> d(nodes.size(), 1);
    int best = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {  // children follow parents
        if (nodes[i].left >= 0) d[nodes[i].left] = d[i] + 1;
        if (nodes[i].right >= 0) d[nodes[i].right] = d[i] + 1;
        best = std::max(best, d[i]);
    }
    return best;
}

std::vector<int> CentroidHierarchy::subpaths_containing(int pos) const {
    std::vector<int> out;
    int cur = 0;
    while (cur >= 0) {
        const Node& n = nodes[cur];
        if (pos < n.lo || pos >= n.hi) break;
        out.push_back(cur);
        if (pos < n.centroid)
            cur = n.left;
        else if (pos > n.centroid)
            cur = n.right;
        else
            break;
    }
    return out;
}

int CentroidHierarchy::max_common_subpath(int pos_a, int pos_b) const {
    int cur = 0;
    while (true) {
        const Node& n = nodes[cur];
        if (pos_a < n.centroid && pos_b < n.centroid)
            cur = n.left;
        else if (pos_a > n.centroid && pos_b > n.centroid)
            cur = n.right;
        else
            return cur;
    }
}

std::vector<std::set<Vertex>> assemble_center_sets(
    const PathCover& pc, const std::vector<CentroidHierarchy>& hierarchies) {
    if (hierarchies.size() != pc.paths.size())
        throw input_error("one hierarchy per path required");
    std::vector<std::set<Vertex>> centers(pc.covering.size());
    for (Vertex v = 0; v < static_cast<int>(pc.covering.size()); ++v) {
        for (const auto& [pid, entries] : pc.covering[v]) {
            const auto& path = pc.paths[pid];
            const CentroidHierarchy& h = hierarchies[pid];
            for (const PortalEntry& e : entries) {
                int pos = pc.position_on(pid, e.portal);
                if (pos < 0) throw structural_error("portal not on its path");
                for (int node : h.subpaths_containing(pos))
                    centers[v].insert(path[h.nodes[node].centroid]);
            }
        }
    }
    return centers;
}

PlanarCoverResult build_planar_cover(const WeightedDigraph& g, const PlanarEmbedding& emb,
                                     double eps) {
    PlanarCoverResult res;
    res.path_cover = build_path_cover(g, emb, eps);  // validates emb and eps
    res.hierarchies.reserve(res.path_cover.paths.size());
    for (const auto& p : res.path_cover.paths)
        res.hierarchies.push_back(build_centroid_hierarchy(static_cast<int>(p.size())));
    res.center_sets = assemble_center_sets(res.path_cover, res.hierarchies);

    // Invert X_v into member sets A_x.
    res.member_sets.assign(g.n(), {});
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex x : res.center_sets[v]) res.member_sets[x].push_back(v);
    for (auto& mem : res.member_sets) std::sort(mem.begin(), mem.end());

    Permutation sigma = Permutation::identity(g.n());
    Permutation sigma_rev = sigma.reversed();

    auto build_dag = [&](const Permutation& perm) {
        std::vector<VertexGadget> gadgets;
        for (Vertex x = 0; x < g.n(); ++x) {
            if (res.member_sets[x].size() < 2) continue;  // nothing to preserve
            std::vector<Vertex> members = res.member_sets[x];
            std::sort(members.begin(), members.end(),
                      [&](Vertex a, Vertex b) { return perm.position(a) < perm.position(b); });
            std::vector<Weight> to_x = single_target_distances(g, x);
            std::vector<Weight> from_x = single_source_distances(g, x);
            gadgets.push_back(build_vertex_gadget(to_x, from_x, members, x));
        }
        return assemble_gadget_dag(g.n(), perm, gadgets).dag;
    };

    res.cover.dags.push_back(build_dag(sigma));
    res.cover.dags.push_back(build_dag(sigma_rev));
    res.cover.stretch_target = 1.0 + eps;
    res.cover.steiner = true;
    res.cover.provenance.construction = "planar";
    res.cover.provenance.parameters["eps"] = std::to_string(eps);
    return res;
}

}  // namespace dagcover
