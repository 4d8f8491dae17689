#include "dagcover/path_cover.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace dagcover {

int PathCover::position_on(int path_id, Vertex v) const {
    const auto& p = paths[path_id];
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] == v) return i;
    return -1;
}

Weight PathCover::path_distance(int path_id, int i, int j) const {
    if (j < i) return kUnreachable;
    return path_prefix[path_id][j] - path_prefix[path_id][i];
}

namespace {

// Undirected skeleton with symmetric weights (min over directions).
struct Skeleton {
    std::vector<std::vector<std::pair<Vertex, Weight>>> adj;

    explicit Skeleton(const WeightedDigraph& g) : adj(g.n()) {
        std::map<std::pair<Vertex, Vertex>, Weight> und;
        for (const Edge& e : g.edges()) {
            auto key = std::make_pair(std::min(e.tail, e.head), std::max(e.tail, e.head));
            auto it = und.find(key);
            if (it == und.end())
                und.emplace(key, e.weight);
            else
                it->second = std::min(it->second, e.weight);
        }
        for (const auto& [key, w] : und) {
            adj[key.first].emplace_back(key.second, w);
            adj[key.second].emplace_back(key.first, w);
        }
    }
};

std::vector<std::vector<Vertex>> skeleton_components(const Skeleton& sk,
                                                     const std::vector<Vertex>& inside) {
    std::vector<char> in(sk.adj.size(), 0), seen(sk.adj.size(), 0);
    for (Vertex v : inside) in[v] = 1;
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s : inside) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (const auto& [w, wt] : sk.adj[u])
                if (in[w] && !seen[w]) seen[w] = 1, q.push(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Shortest-path tree of the skeleton restricted to `inside`, rooted at
// the smallest id; parent[-1] for the root. Deterministic tie-breaks.
std::vector<Vertex> skeleton_sp_tree(const Skeleton& sk, const std::vector<Vertex>& inside,
                                     Vertex root) {
    std::vector<char> in(sk.adj.size(), 0);
    for (Vertex v : inside) in[v] = 1;
    std::vector<Weight> dist(sk.adj.size(), kUnreachable);
    std::vector<Vertex> parent(sk.adj.size(), -1);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[root] = 0;
    heap.emplace(0, root);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (const auto& [v, w] : sk.adj[u]) {
            if (!in[v]) continue;
            Weight cand = d + w;
            if (cand < dist[v] || (cand == dist[v] && parent[v] > u)) {
                dist[v] = cand;
                parent[v] = u;
                heap.emplace(cand, v);
            }
        }
    }
    return parent;
}

std::vector<Vertex> tree_path_to(const std::vector<Vertex>& parent, Vertex root, Vertex target) {
    std::vector<Vertex> path;
    for (Vertex v = target; v != -1; v = parent[v]) {
        path.push_back(v);
        if (v == root) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

size_t max_component_size(const Skeleton& sk, const std::vector<Vertex>& region,
                          const std::set<Vertex>& removed) {
    std::vector<Vertex> rest;
    for (Vertex v : region)
        if (!removed.count(v)) rest.push_back(v);
    size_t best = 0;
    for (const auto& c : skeleton_components(sk, rest)) best = std::max(best, c.size());
    return best;
}

struct Builder {
    const WeightedDigraph& g;
    const DistanceMatrix& gdist;
    double eps;
    Skeleton sk;
    PathCover pc;
    // association list per vertex gets turned into covering sets later
    std::vector<std::set<int>> assoc;

    Builder(const WeightedDigraph& graph, const DistanceMatrix& dm, double e)
        : g(graph), gdist(dm), eps(e), sk(graph) {
        assoc.resize(graph.n());
        pc.eps = e;
    }

    int add_path(std::vector<Vertex> seq) {
        std::vector<Weight> prefix(seq.size(), 0.0);
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            Weight w = kUnreachable;
            for (const auto& [h, wt] : g.out(seq[i]))
                if (h == seq[i + 1]) w = wt;
            prefix[i + 1] = prefix[i] + w;
        }
        pc.paths.push_back(std::move(seq));
        pc.path_prefix.push_back(std::move(prefix));
        return pc.path_count() - 1;
    }

    // Maximal forward-traversable runs of a tree path; the runs cover
    // every path vertex (singletons included).
    std::vector<int> dipath_pieces(const std::vector<Vertex>& walk) {
        std::vector<int> ids;
        size_t start = 0;
        while (start < walk.size()) {
            size_t end = start;
            while (end + 1 < walk.size() && g.has_edge(walk[end], walk[end + 1])) ++end;
            ids.push_back(add_path({walk.begin() + start, walk.begin() + end + 1}));
            start = end + 1;
        }
        return ids;
    }

    void recurse(const std::vector<Vertex>& region) {
        if (region.size() <= 3) {
            for (Vertex v : region) {
                int pid = add_path({v});
                for (Vertex u : region) assoc[u].insert(pid);
            }
            return;
        }
        Vertex root = *std::min_element(region.begin(), region.end());
        std::vector<Vertex> parent = skeleton_sp_tree(sk, region, root);

        std::set<Vertex> removed;
        std::vector<std::vector<Vertex>> sep_walks;
        while (max_component_size(sk, region, removed) > region.size() / 2) {
            Vertex best_target = -1;
            size_t best_result = region.size() + 1;
            for (Vertex p : region) {
                if (removed.count(p)) continue;
                std::set<Vertex> trial = removed;
                for (Vertex v : tree_path_to(parent, root, p)) trial.insert(v);
                size_t worst = max_component_size(sk, region, trial);
                if (worst < best_result) {
                    best_result = worst;
                    best_target = p;
                }
            }
            if (best_target == -1) break;
            std::vector<Vertex> walk = tree_path_to(parent, root, best_target);
            for (Vertex v : walk) removed.insert(v);
            sep_walks.push_back(std::move(walk));
        }

        std::vector<int> piece_ids;
        for (const auto& walk : sep_walks)
            for (int pid : dipath_pieces(walk)) piece_ids.push_back(pid);
        for (Vertex v : region)
            for (int pid : piece_ids) assoc[v].insert(pid);

        std::vector<Vertex> rest;
        for (Vertex v : region)
            if (!removed.count(v)) rest.push_back(v);
        for (const auto& comp : skeleton_components(sk, rest)) recurse(comp);
    }

    // Greedy eps-covering portal selection, both sides, per association.
    std::vector<PortalEntry> portals_for(Vertex v, int pid) const {
        const auto& path = pc.paths[pid];
        const auto& prefix = pc.path_prefix[pid];
        const int len = static_cast<int>(path.size());
        std::set<int> kept;

        std::vector<int> kept_from;
        for (int i = 0; i < len; ++i) {
            Weight d = gdist(v, path[i]);
            if (!reachable(d)) continue;
            bool covered = false;
            for (int j : kept_from)
                if (gdist(v, path[j]) + (prefix[i] - prefix[j]) <= (1.0 + eps) * d) {
                    covered = true;
                    break;
                }
            if (!covered) kept_from.push_back(i);
        }
        std::vector<int> kept_to;
        for (int i = len - 1; i >= 0; --i) {
            Weight d = gdist(path[i], v);
            if (!reachable(d)) continue;
            bool covered = false;
            for (int j : kept_to)
                if ((prefix[j] - prefix[i]) + gdist(path[j], v) <= (1.0 + eps) * d) {
                    covered = true;
                    break;
                }
            if (!covered) kept_to.push_back(i);
        }
        kept.insert(kept_from.begin(), kept_from.end());
        kept.insert(kept_to.begin(), kept_to.end());

        std::vector<PortalEntry> entries;
        for (int i : kept)
            entries.push_back({path[i], gdist(v, path[i]), gdist(path[i], v)});
        return entries;
    }

    PathCover finish() {
        pc.vertex_paths.assign(g.n(), {});
        pc.covering.assign(g.n(), {});
        for (Vertex v = 0; v < g.n(); ++v) {
            for (int pid : assoc[v]) {
                pc.vertex_paths[v].push_back(pid);
                pc.covering[v].emplace_back(pid, portals_for(v, pid));
            }
        }
        return std::move(pc);
    }
};

}  // namespace

PathCover build_path_cover(const WeightedDigraph& g, const PlanarEmbedding& emb, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw input_error("eps must be in (0, 1)");
    EmbeddingReport emb_rep = validate_embedding(g, emb);
    if (!emb_rep.ok) throw structural_error("embedding failed the Euler check: " + emb_rep.witness);

    DistanceMatrix gdist = all_pairs_distances(g);
    Builder b(g, gdist, eps);
    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    for (const auto& comp : skeleton_components(b.sk, all)) b.recurse(comp);
    return b.finish();
}

void validate_path_cover(const WeightedDigraph& g, const PathCover& pc) {
    for (int pid = 0; pid < pc.path_count(); ++pid) {
        const auto& p = pc.paths[pid];
        if (p.empty()) throw structural_error("empty path in cover");
        if (pc.path_prefix[pid].size() != p.size())
            throw structural_error("prefix sums missing for a path");
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            Weight w = kUnreachable;
            for (const auto& [h, wt] : g.out(p[i]))
                if (h == p[i + 1]) w = wt;
            if (!reachable(w)) throw structural_error("path is not a dipath of the graph");
            if (pc.path_prefix[pid][i + 1] != pc.path_prefix[pid][i] + w)
                throw structural_error("path prefix sums disagree with edge weights");
        }
    }
    for (Vertex v = 0; v < static_cast<int>(pc.covering.size()); ++v)
        for (const auto& [pid, entries] : pc.covering[v]) {
            if (pid < 0 || pid >= pc.path_count())
                throw structural_error("covering set references unknown path");
            for (const PortalEntry& e : entries)
                if (pc.position_on(pid, e.portal) < 0) {
                    std::ostringstream os;
                    os << "portal " << e.portal << " of vertex " << v << " is not on path " << pid;
                    throw structural_error(os.str());
                }
        }
}

ContractResult verify_path_cover_contract(const DistanceMatrix& gdist, const PathCover& pc) {
    const int n = gdist.n;
    // Stored portal distances must match the oracle exactly.
    for (Vertex v = 0; v < n && v < static_cast<int>(pc.covering.size()); ++v)
        for (const auto& [pid, entries] : pc.covering[v])
            for (const PortalEntry& e : entries) {
                if (pc.position_on(pid, e.portal) < 0)
                    throw structural_error("portal not on its path");
                if (e.dist_to != gdist(v, e.portal) || e.dist_from != gdist(e.portal, v))
                    throw structural_error("stored portal distance disagrees with the oracle");
            }

    ContractResult res;
    double worst = -1.0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            Weight d = gdist(u, v);
            if (!reachable(d)) continue;
            std::optional<ContractTriple> triple = best_contract_triple(pc, u, v);
            Weight best = triple ? triple->value : kUnreachable;
            double ratio = reachable(best) ? best / d : kUnreachable;
            if (ratio > worst) {
                worst = ratio;
                res.worst_u = u;
                res.worst_v = v;
            }
            if (!reachable(best) || best > (1.0 + pc.eps) * d * (1.0 + 1e-9)) {
                res.ok = false;
                if (res.witness.empty()) {
                    std::ostringstream os;
                    os << "pair (" << u << "," << v << ") d=" << d << " best=" << best;
                    res.witness = os.str();
                }
            }
        }
    res.max_ratio = worst < 0.0 ? 0.0 : worst;
    return res;
}

std::optional<ContractTriple> best_contract_triple(const PathCover& pc, Vertex u, Vertex v) {
    ContractTriple best;
    const auto& cov_u = pc.covering[u];
    const auto& cov_v = pc.covering[v];
    for (const auto& [pid, entries_u] : cov_u) {
        const std::vector<PortalEntry>* entries_v = nullptr;
        for (const auto& [pid2, e2] : cov_v)
            if (pid2 == pid) {
                entries_v = &e2;
                break;
            }
        if (!entries_v) continue;
        std::vector<int> pos_u(entries_u.size()), pos_v(entries_v->size());
        for (size_t i = 0; i < entries_u.size(); ++i)
            pos_u[i] = pc.position_on(pid, entries_u[i].portal);
        for (size_t i = 0; i < entries_v->size(); ++i)
            pos_v[i] = pc.position_on(pid, (*entries_v)[i].portal);
        for (size_t i = 0; i < entries_u.size(); ++i) {
            const PortalEntry& eu = entries_u[i];
            if (!reachable(eu.dist_to)) continue;
            for (size_t j = 0; j < entries_v->size(); ++j) {
                const PortalEntry& ev = (*entries_v)[j];
                if (!reachable(ev.dist_from)) continue;
                Weight mid = pc.path_distance(pid, pos_u[i], pos_v[j]);
                if (!reachable(mid)) continue;
                Weight total = eu.dist_to + mid + ev.dist_from;
                if (total < best.value) {
                    best.value = total;
                    best.path = pid;
                    best.u_portal = eu.portal;
                    best.v_portal = ev.portal;
                }
            }
        }
    }
    if (best.path < 0) return std::nullopt;
    return best;
}

PathCoverStats path_cover_stats(const PathCover& pc) {
    PathCoverStats st;
    for (const auto& ps : pc.vertex_paths)
        st.max_paths_per_vertex = std::max(st.max_paths_per_vertex, ps.size());
    for (const auto& cov : pc.covering)
        for (const auto& [pid, entries] : cov)
            st.max_portals_per_set = std::max(st.max_portals_per_set, entries.size());
    for (const auto& p : pc.paths) st.total_path_vertices += p.size();
    return st;
}

}  // namespace dagcover
