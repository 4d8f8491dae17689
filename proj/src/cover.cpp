#include "dagcover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

namespace dagcover {

bool SteinerDag::contains_original(Vertex v) const {
    return std::binary_search(original_vertices.begin(), original_vertices.end(), v);
}

namespace {

// Dense local index for a dag's combined vertex space: original vertex
// original_vertices[i] -> i, steiner k -> |originals| + k.
struct DagIndex {
    const SteinerDag* dag;
    std::vector<int> orig_to_local;  // graph_n entries, -1 when absent
    int n_local;

    explicit DagIndex(const SteinerDag& d) : dag(&d) {
        orig_to_local.assign(d.graph_n, -1);
        for (int i = 0; i < static_cast<int>(d.original_vertices.size()); ++i)
            orig_to_local[d.original_vertices[i]] = i;
        n_local = d.vertex_count();
    }

    int local(Vertex ref) const {
        if (ref < dag->graph_n) return orig_to_local[ref];
        int k = ref - dag->graph_n;
        if (k >= dag->steiner_count) return -1;
        return static_cast<int>(dag->original_vertices.size()) + k;
    }
};

}  // namespace

void validate_steiner_dag_structure(const SteinerDag& dag) {
    if (!std::is_sorted(dag.original_vertices.begin(), dag.original_vertices.end()) ||
        std::adjacent_find(dag.original_vertices.begin(), dag.original_vertices.end()) !=
            dag.original_vertices.end())
        throw structural_error("dag original vertex list must be sorted and unique");
    for (Vertex v : dag.original_vertices)
        if (v < 0 || v >= dag.graph_n) throw structural_error("dag original vertex out of range");
    DagIndex idx(dag);
    for (const Edge& e : dag.edges) {
        if (idx.local(e.tail) < 0 || idx.local(e.head) < 0)
            throw structural_error("dag edge endpoint outside declared vertex sets");
        if (e.tail == e.head) throw structural_error("dag contains a self-loop");
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            throw structural_error("dag edge weight must be finite and non-negative");
        if (dag.is_original(e.tail) && dag.is_original(e.head) && e.weight == 0.0)
            throw structural_error("zero-weight edge between original vertices");
    }
    if (static_cast<int>(dag.topo_order.size()) != idx.n_local)
        throw structural_error("declared order must cover all dag vertices");
    std::vector<char> seen(idx.n_local, 0);
    for (Vertex ref : dag.topo_order) {
        int l = idx.local(ref);
        if (l < 0 || seen[l]) throw structural_error("declared order is not a permutation");
        seen[l] = 1;
    }
}

namespace {

// Position of each local vertex in the declared order, or empty if the
// order does not respect some edge.
std::vector<int> order_positions_if_valid(const SteinerDag& dag, const DagIndex& idx) {
    std::vector<int> pos(idx.n_local, -1);
    for (int p = 0; p < static_cast<int>(dag.topo_order.size()); ++p)
        pos[idx.local(dag.topo_order[p])] = p;
    for (const Edge& e : dag.edges)
        if (pos[idx.local(e.tail)] >= pos[idx.local(e.head)]) return {};
    return pos;
}

struct DagEngine {
    const SteinerDag* dag;
    DagIndex idx;
    std::vector<std::vector<std::pair<int, Weight>>> adj;  // local ids
    std::vector<int> topo_pos;                             // empty if declared order invalid
    std::vector<int> topo_seq;                             // local ids in declared order

    explicit DagEngine(const SteinerDag& d) : dag(&d), idx(d) {
        adj.assign(idx.n_local, {});
        for (const Edge& e : d.edges)
            adj[idx.local(e.tail)].emplace_back(idx.local(e.head), e.weight);
        topo_pos = order_positions_if_valid(d, idx);
        if (!topo_pos.empty()) {
            topo_seq.assign(idx.n_local, -1);
            for (int l = 0; l < idx.n_local; ++l) topo_seq[topo_pos[l]] = l;
        }
    }

    bool order_valid() const { return !topo_pos.empty(); }

    // Distances from a local source to every local vertex.
    std::vector<Weight> distances(int src_local) const {
        std::vector<Weight> dist(idx.n_local, kUnreachable);
        dist[src_local] = 0.0;
        if (order_valid()) {
            for (int p = topo_pos[src_local]; p < idx.n_local; ++p) {
                int u = topo_seq[p];
                if (!reachable(dist[u])) continue;
                for (const auto& [v, w] : adj[u]) {
                    Weight cand = dist[u] + w;
                    if (cand < dist[v]) dist[v] = cand;
                }
            }
        } else {
            using Item = std::pair<Weight, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
            heap.emplace(0.0, src_local);
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d > dist[u]) continue;
                for (const auto& [v, w] : adj[u])
                    if (d + w < dist[v]) {
                        dist[v] = d + w;
                        heap.emplace(dist[v], v);
                    }
            }
        }
        return dist;
    }
};

double ratio_of(Weight dag_dist, Weight graph_dist) {
    if (!reachable(dag_dist)) return kUnreachable;
    if (graph_dist == 0.0) return dag_dist == 0.0 ? 1.0 : kUnreachable;
    return dag_dist / graph_dist;
}

}  // namespace

std::vector<Weight> dag_distances_from(const SteinerDag& dag, Vertex source) {
    DagEngine eng(dag);
    std::vector<Weight> out(dag.graph_n, kUnreachable);
    int src = eng.idx.local(source);
    if (src < 0) return out;
    std::vector<Weight> local = eng.distances(src);
    for (Vertex v = 0; v < dag.graph_n; ++v) {
        int l = eng.idx.local(v);
        if (l >= 0) out[v] = local[l];
    }
    return out;
}

namespace {

// Shared n x n matrix of min-over-dags distances between original
// vertices. Rows computed per (dag, source) and folded in.
std::vector<Weight> min_dag_distances(const DagCover& cover, int graph_n, int threads) {
    std::vector<Weight> best(static_cast<size_t>(graph_n) * graph_n, kUnreachable);
    for (size_t di = 0; di < cover.dags.size(); ++di) {
        const SteinerDag& dag = cover.dags[di];
        DagEngine eng(dag);
        std::vector<std::vector<Weight>> rows(graph_n);
        auto run = [&](int begin, int step) {
            for (Vertex s = begin; s < graph_n; s += step) {
                int sl = eng.idx.local(s);
                if (sl < 0) continue;
                std::vector<Weight> local = eng.distances(sl);
                std::vector<Weight> row(graph_n, kUnreachable);
                for (Vertex v = 0; v < graph_n; ++v) {
                    int l = eng.idx.local(v);
                    if (l >= 0) row[v] = local[l];
                }
                rows[s] = std::move(row);
            }
        };
        if (threads <= 1 || graph_n < 2 * threads) {
            run(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
            for (auto& th : pool) th.join();
        }
        for (Vertex s = 0; s < graph_n; ++s) {
            if (rows[s].empty()) continue;
            for (Vertex v = 0; v < graph_n; ++v)
                best[static_cast<size_t>(s) * graph_n + v] =
                    std::min(best[static_cast<size_t>(s) * graph_n + v], rows[s][v]);
        }
    }
    return best;
}

}  // namespace

std::optional<DominatingWitness> verify_dominating(const DistanceMatrix& gdist,
                                                   const DagCover& cover) {
    for (const SteinerDag& dag : cover.dags) validate_steiner_dag_structure(dag);
    const int n = gdist.n;
    for (size_t di = 0; di < cover.dags.size(); ++di) {
        const SteinerDag& dag = cover.dags[di];
        DagEngine eng(dag);
        for (Vertex u : dag.original_vertices) {
            std::vector<Weight> local = eng.distances(eng.idx.local(u));
            for (Vertex v = 0; v < n; ++v) {
                int l = eng.idx.local(v);
                if (l < 0) continue;
                Weight dd = local[l];
                if (!reachable(dd)) continue;  // UNREACHABLE dominates anything
                Weight gd = gdist(u, v);
                if (!reachable(gd) || dd < gd * (1.0 - kStretchTol))
                    return DominatingWitness{static_cast<int>(di), u, v, dd, gd};
            }
        }
    }
    return std::nullopt;
}

StretchResult verify_stretch(const DistanceMatrix& gdist, const DagCover& cover, double t) {
    if (t < 1.0) throw input_error("stretch target must be >= 1");
    const int n = gdist.n;
    std::vector<Weight> best = min_dag_distances(cover, n, 1);
    StretchResult res;
    double worst = -1.0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            Weight gd = gdist(u, v);
            if (!reachable(gd)) continue;
            Weight bd = best[static_cast<size_t>(u) * n + v];
            double ratio = ratio_of(bd, gd);
            if (ratio > worst) {
                worst = ratio;
                res.witness = StretchWitness{u, v, bd, gd};
            }
            if (!reachable(bd) || bd > t * gd * (1.0 + kStretchTol)) res.ok = false;
        }
    res.max_ratio = worst < 0.0 ? 0.0 : worst;
    return res;
}

namespace {

// Union key for extra-edge counting: originals map to themselves,
// Steiner ids get a per-dag offset so distinct dags never collide.
int64_t edge_ref_key(const SteinerDag& dag, int64_t steiner_base, Vertex ref) {
    if (ref < dag.graph_n) return ref;
    return steiner_base + (ref - dag.graph_n);
}

}  // namespace

int64_t count_extra_edges(const WeightedDigraph& g, const DagCover& cover) {
    std::set<std::pair<int64_t, int64_t>> extra;
    int64_t steiner_base = g.n();
    for (const SteinerDag& dag : cover.dags) {
        for (const Edge& e : dag.edges) {
            bool orig = dag.is_original(e.tail) && dag.is_original(e.head);
            if (orig && g.has_edge(e.tail, e.head)) continue;
            extra.emplace(edge_ref_key(dag, steiner_base, e.tail),
                          edge_ref_key(dag, steiner_base, e.head));
        }
        steiner_base += dag.steiner_count;
    }
    return static_cast<int64_t>(extra.size());
}

CoverCertificate certify(const WeightedDigraph& g, const DagCover& cover, int threads) {
    CoverCertificate cert;
    cert.per_dag.resize(cover.dags.size());

    for (size_t di = 0; di < cover.dags.size(); ++di) {
        const SteinerDag& dag = cover.dags[di];
        DagStats& st = cert.per_dag[di];
        try {
            validate_steiner_dag_structure(dag);
        } catch (const structural_error& e) {
            cert.structure_ok = false;
            if (cert.structure_witness.empty()) {
                std::ostringstream os;
                os << "dag " << di << ": " << e.what();
                cert.structure_witness = os.str();
            }
            continue;
        }
        st.edge_count = static_cast<int64_t>(dag.edges.size());
        st.steiner_count = dag.steiner_count;
        cert.steiner_vertices += dag.steiner_count;

        DagIndex idx(dag);
        st.order_valid = !order_positions_if_valid(dag, idx).empty();
        if (st.order_valid) {
            st.acyclic = true;
        } else {
            // Check the edge set itself; a cyclic dag yields a witness in
            // combined ids.
            std::vector<std::pair<Vertex, Vertex>> local_edges;
            local_edges.reserve(dag.edges.size());
            for (const Edge& e : dag.edges)
                local_edges.emplace_back(idx.local(e.tail), idx.local(e.head));
            AcyclicityResult ac = check_acyclic_and_order(idx.n_local, local_edges);
            st.acyclic = ac.is_dag;
            if (!ac.is_dag) {
                std::vector<Vertex> orig_order(idx.n_local);
                for (Vertex v = 0; v < dag.graph_n; ++v)
                    if (idx.local(v) >= 0) orig_order[idx.local(v)] = v;
                for (int k = 0; k < dag.steiner_count; ++k)
                    orig_order[idx.local(dag.graph_n + k)] = dag.graph_n + k;
                for (Vertex l : ac.cycle) st.cycle_witness.push_back(orig_order[l]);
            }
        }
        if (!st.acyclic || !st.order_valid) cert.acyclic_ok = false;

        int64_t extra_here = 0;
        for (const Edge& e : dag.edges)
            if (!(dag.is_original(e.tail) && dag.is_original(e.head) &&
                  g.has_edge(e.tail, e.head)))
                ++extra_here;
        st.extra_edge_count = extra_here;
    }

    if (!cert.structure_ok) return cert;

    cert.extra_edges = count_extra_edges(g, cover);

    DistanceMatrix gdist = all_pairs_distances(g, threads);

    // Dominating over all (dag, source, target) triples.
    for (size_t di = 0; di < cover.dags.size() && cert.dominating_ok; ++di) {
        const SteinerDag& dag = cover.dags[di];
        DagEngine eng(dag);
        for (Vertex u : dag.original_vertices) {
            std::vector<Weight> local = eng.distances(eng.idx.local(u));
            for (Vertex v = 0; v < g.n(); ++v) {
                int l = eng.idx.local(v);
                if (l < 0 || !reachable(local[l])) continue;
                Weight gd = gdist(u, v);
                if (!reachable(gd) || local[l] < gd * (1.0 - kStretchTol)) {
                    cert.dominating_ok = false;
                    cert.dominating_witness =
                        DominatingWitness{static_cast<int>(di), u, v, local[l], gd};
                    break;
                }
            }
            if (!cert.dominating_ok) break;
        }
    }

    // Stretch: min over dags within target * d_G for every reachable pair.
    std::vector<Weight> best = min_dag_distances(cover, g.n(), threads);
    const double t = cover.stretch_target;
    double worst = -1.0;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            Weight gd = gdist(u, v);
            if (!reachable(gd)) continue;
            Weight bd = best[static_cast<size_t>(u) * g.n() + v];
            double ratio = ratio_of(bd, gd);
            if (ratio > worst) {
                worst = ratio;
                cert.stretch_witness = StretchWitness{u, v, bd, gd};
            }
            if (!reachable(bd) || bd > t * gd * (1.0 + kStretchTol)) cert.stretch_ok = false;
        }
    cert.max_stretch_ratio = worst < 0.0 ? 0.0 : worst;
    return cert;
}

bool replay_dominating_witness(const WeightedDigraph& g, const DagCover& cover,
                               const DominatingWitness& w) {
    if (w.dag < 0 || w.dag >= static_cast<int>(cover.dags.size())) return false;
    std::vector<Weight> dd = dag_distances_from(cover.dags[w.dag], w.u);
    std::vector<Weight> gd = single_source_distances(g, w.u);
    if (!reachable(dd[w.v])) return false;
    return !reachable(gd[w.v]) || dd[w.v] < gd[w.v] * (1.0 - kStretchTol);
}

bool replay_stretch_witness(const WeightedDigraph& g, const DagCover& cover, double t,
                            const StretchWitness& w) {
    std::vector<Weight> gd = single_source_distances(g, w.u);
    if (!reachable(gd[w.v])) return false;
    Weight best = kUnreachable;
    for (const SteinerDag& dag : cover.dags)
        best = std::min(best, dag_distances_from(dag, w.u)[w.v]);
    return !reachable(best) || best > t * gd[w.v] * (1.0 + kStretchTol);
}

}  // namespace dagcover
