#include "dagcover/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <thread>

namespace dagcover {

WeightedDigraph::WeightedDigraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    std::map<std::pair<Vertex, Vertex>, Weight> collapsed;
    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw input_error("edge endpoint out of range");
        if (e.tail == e.head) throw input_error("self-loops are not allowed");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw input_error("edge weights must be strictly positive and finite");
        auto key = std::make_pair(e.tail, e.head);
        auto it = collapsed.find(key);
        if (it == collapsed.end())
            collapsed.emplace(key, e.weight);
        else
            it->second = std::min(it->second, e.weight);
    }
    edges_.reserve(collapsed.size());
    adj_.assign(n, {});
    radj_.assign(n, {});
    for (const auto& [key, w] : collapsed) {
        edges_.push_back({key.first, key.second, w});
        adj_[key.first].emplace_back(key.second, w);
        radj_[key.second].emplace_back(key.first, w);
    }
}

bool WeightedDigraph::has_edge(Vertex tail, Vertex head) const {
    if (tail < 0 || tail >= n_) return false;
    for (const auto& [h, w] : adj_[tail])
        if (h == head) return true;
    return false;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.order.resize(n);
    p.inverse.resize(n);
    for (int i = 0; i < n; ++i) p.order[i] = i, p.inverse[i] = i;
    return p;
}

Permutation Permutation::from_order(std::vector<Vertex> order) {
    Permutation p;
    p.order = std::move(order);
    p.inverse.assign(p.order.size(), -1);
    for (int k = 0; k < static_cast<int>(p.order.size()); ++k) {
        Vertex v = p.order[k];
        if (v < 0 || v >= static_cast<int>(p.order.size()) || p.inverse[v] != -1)
            throw input_error("order is not a permutation of 0..n-1");
        p.inverse[v] = k;
    }
    return p;
}

Permutation Permutation::reversed() const {
    std::vector<Vertex> rev(order.rbegin(), order.rend());
    return from_order(std::move(rev));
}

namespace {

// Dijkstra over an adjacency view. Equal-distance relaxations keep the
// smallest predecessor id.
template <typename AdjFn>
void dijkstra(int n, Vertex source, AdjFn&& adj, std::vector<Weight>& dist,
              std::vector<Vertex>* parent) {
    dist.assign(n, kUnreachable);
    if (parent) parent->assign(n, -1);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        adj(u, [&](Vertex v, Weight w) {
            Weight cand = d + w;
            if (cand < dist[v]) {
                dist[v] = cand;
                if (parent) (*parent)[v] = u;
                heap.emplace(cand, v);
            } else if (parent && cand == dist[v] && (*parent)[v] > u) {
                (*parent)[v] = u;
            }
        });
    }
}

}  // namespace

std::vector<Weight> single_source_distances(const WeightedDigraph& g, Vertex source) {
    if (source < 0 || source >= g.n()) throw input_error("source vertex out of range");
    std::vector<Weight> dist;
    dijkstra(
        g.n(), source,
        [&](Vertex u, auto&& relax) {
            for (const auto& [v, w] : g.out(u)) relax(v, w);
        },
        dist, nullptr);
    return dist;
}

ShortestPathTree single_source_tree(const WeightedDigraph& g, Vertex source) {
    if (source < 0 || source >= g.n()) throw input_error("source vertex out of range");
    ShortestPathTree t;
    dijkstra(
        g.n(), source,
        [&](Vertex u, auto&& relax) {
            for (const auto& [v, w] : g.out(u)) relax(v, w);
        },
        t.dist, &t.parent);
    return t;
}

std::vector<Weight> single_target_distances(const WeightedDigraph& g, Vertex target) {
    if (target < 0 || target >= g.n()) throw input_error("target vertex out of range");
    std::vector<Weight> dist;
    dijkstra(
        g.n(), target,
        [&](Vertex u, auto&& relax) {
            for (const auto& [v, w] : g.in(u)) relax(v, w);
        },
        dist, nullptr);
    return dist;
}

DistanceMatrix all_pairs_distances(const WeightedDigraph& g, int threads) {
    DistanceMatrix m;
    m.n = g.n();
    m.data.assign(static_cast<size_t>(g.n()) * g.n(), kUnreachable);
    auto run = [&](int begin, int step) {
        for (Vertex s = begin; s < g.n(); s += step) {
            std::vector<Weight> row = single_source_distances(g, s);
            std::copy(row.begin(), row.end(), m.data.begin() + static_cast<size_t>(s) * g.n());
        }
    };
    if (threads <= 1 || g.n() < 2 * threads) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
        for (auto& th : pool) th.join();
    }
    return m;
}

double aspect_ratio(const DistanceMatrix& d) {
    Weight lo = kUnreachable, hi = 0.0;
    for (Vertex u = 0; u < d.n; ++u)
        for (Vertex v = 0; v < d.n; ++v) {
            if (u == v) continue;
            Weight x = d(u, v);
            if (!reachable(x)) continue;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    if (!reachable(lo)) throw input_error("aspect ratio undefined: no reachable pair");
    return hi / lo;
}

std::pair<WeightedDigraph, double> normalize_weights(const WeightedDigraph& g) {
    if (g.m() == 0) return {g, 1.0};
    double scale = kUnreachable;
    for (const Edge& e : g.edges()) scale = std::min(scale, e.weight);
    std::vector<Edge> scaled = g.edges();
    for (Edge& e : scaled) e.weight /= scale;
    return {WeightedDigraph(g.n(), std::move(scaled)), scale};
}

AcyclicityResult check_acyclic_and_order(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> out(n);
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : edges) {
        out[a].push_back(b);
        ++indeg[b];
    }
    AcyclicityResult res;
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> remaining = indeg;
    res.order.reserve(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        res.order.push_back(v);
        for (Vertex w : out[v])
            if (--remaining[w] == 0) ready.push(w);
    }
    if (static_cast<int>(res.order.size()) == n) {
        res.is_dag = true;
        return res;
    }
    // DFS for a back edge; the gray stack segment is the witness cycle.
    res.is_dag = false;
    res.order.clear();
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
    std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
    std::vector<Vertex> stack;
    std::vector<size_t> next_child;
    for (Vertex root = 0; root < n && res.cycle.empty(); ++root) {
        if (color[root] != 0) continue;
        stack = {root};
        next_child = {0};
        color[root] = 1;
        while (!stack.empty() && res.cycle.empty()) {
            Vertex u = stack.back();
            if (next_child.back() < out[u].size()) {
                Vertex w = out[u][next_child.back()++];
                if (color[w] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), w);
                    res.cycle.assign(it, stack.end());
                    res.cycle.push_back(w);
                } else if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back(w);
                    next_child.push_back(0);
                }
            } else {
                color[u] = 2;
                stack.pop_back();
                next_child.pop_back();
            }
        }
    }
    return res;
}

namespace {

template <typename AdjView>
std::vector<Weight> induced_dijkstra(const WeightedDigraph& g, const std::vector<Vertex>& active,
                                     Vertex source, AdjView&& view) {
    std::vector<char> in_active(g.n(), 0);
    for (Vertex v : active) in_active[v] = 1;
    if (source < 0 || source >= g.n() || !in_active[source])
        throw input_error("source not in the active set");
    std::vector<Weight> dist;
    dijkstra(
        g.n(), source,
        [&](Vertex u, auto&& relax) {
            for (const auto& [v, w] : view(u))
                if (in_active[v]) relax(v, w);
        },
        dist, nullptr);
    return dist;
}

}  // namespace

std::vector<Weight> induced_source_distances(const WeightedDigraph& g,
                                             const std::vector<Vertex>& active, Vertex source) {
    return induced_dijkstra(g, active, source, [&](Vertex u) -> const auto& { return g.out(u); });
}

std::vector<Weight> induced_target_distances(const WeightedDigraph& g,
                                             const std::vector<Vertex>& active, Vertex target) {
    return induced_dijkstra(g, active, target, [&](Vertex u) -> const auto& { return g.in(u); });
}

}  // namespace dagcover
