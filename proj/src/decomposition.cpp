#include "dagcover/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace dagcover {

namespace {

int max_bag_size(const std::vector<std::vector<Vertex>>& bags) {
    size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best);
}

std::vector<std::pair<Vertex, Vertex>> undirected_edges(const WeightedDigraph& g) {
    std::set<std::pair<Vertex, Vertex>> set;
    for (const Edge& e : g.edges())
        set.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));
    return {set.begin(), set.end()};
}

}  // namespace

int TreeDecomposition::width() const { return max_bag_size(bags) - 1; }

int PathDecomposition::width() const { return max_bag_size(bags) - 1; }

TreeDecomposition PathDecomposition::as_tree() const {
    TreeDecomposition td;
    td.bags = bags;
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.tree_edges.emplace_back(i, i + 1);
    return td;
}

ValidationReport validate_decomposition_of(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                           const TreeDecomposition& td) {
    const int nb = td.bag_count();
    for (const auto& bag : td.bags)
        for (Vertex v : bag)
            if (v < 0 || v >= n) throw structural_error("bag contains out-of-range vertex id");
    for (const auto& [a, b] : td.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            throw structural_error("tree edge references out-of-range bag index");

    ValidationReport rep;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (rep.witness.empty()) rep.witness = msg;
    };

    // The bag graph must be a tree (connected, |E| = |bags| - 1).
    if (nb > 0) {
        if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
            fail(rep.structure_ok, "bag graph is not a tree: wrong edge count");
        } else {
            std::vector<std::vector<int>> adj(nb);
            for (const auto& [a, b] : td.tree_edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::vector<char> seen(nb, 0);
            std::queue<int> q;
            q.push(0);
            seen[0] = 1;
            int cnt = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[x])
                    if (!seen[y]) seen[y] = 1, ++cnt, q.push(y);
            }
            if (cnt != nb) fail(rep.structure_ok, "bag graph is not connected");
        }
    }

    std::vector<char> covered(n, 0);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) covered[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v]) {
            std::ostringstream os;
            os << "vertex " << v << " is in no bag";
            fail(rep.coverage_ok, os.str());
            break;
        }

    for (const auto& [u, v] : edges) {
        bool found = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") has no common bag";
            fail(rep.edges_ok, os.str());
            break;
        }
    }

    if (rep.structure_ok && nb > 0) {
        std::vector<std::vector<int>> adj(nb);
        for (const auto& [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> holding;
            for (int i = 0; i < nb; ++i)
                if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) holding.push_back(i);
            if (holding.size() <= 1) continue;
            std::set<int> hold_set(holding.begin(), holding.end());
            std::set<int> seen{holding[0]};
            std::queue<int> q;
            q.push(holding[0]);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[x])
                    if (hold_set.count(y) && !seen.count(y)) seen.insert(y), q.push(y);
            }
            if (seen.size() != hold_set.size()) {
                std::ostringstream os;
                os << "bags holding vertex " << v << " are not connected";
                fail(rep.subtrees_ok, os.str());
                break;
            }
        }
    }
    return rep;
}

ValidationReport validate_decomposition(const WeightedDigraph& g, const TreeDecomposition& td) {
    return validate_decomposition_of(g.n(), undirected_edges(g), td);
}

ValidationReport validate_path_decomposition(int n,
                                             const std::vector<std::pair<Vertex, Vertex>>& edges,
                                             const PathDecomposition& pd) {
    ValidationReport rep = validate_decomposition_of(n, edges, pd.as_tree());
    if (!rep.ok()) return rep;
    // Interval property: for a path the subtree condition is exactly
    // contiguity, but check explicitly so failures name the vertex.
    for (Vertex v = 0; v < n; ++v) {
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
            if (std::binary_search(pd.bags[i].begin(), pd.bags[i].end(), v)) {
                if (first == -1) first = i;
                last = i;
            }
        for (int i = first; i != -1 && i <= last; ++i)
            if (!std::binary_search(pd.bags[i].begin(), pd.bags[i].end(), v)) {
                rep.subtrees_ok = false;
                std::ostringstream os;
                os << "vertex " << v << " does not occupy a contiguous bag interval";
                rep.witness = os.str();
                return rep;
            }
    }
    return rep;
}

TreeDecomposition heuristic_tree_decomposition(const WeightedDigraph& g) {
    const int n = g.n();
    std::vector<std::set<Vertex>> nb(n);
    for (const Edge& e : g.edges()) {
        nb[e.tail].insert(e.head);
        nb[e.head].insert(e.tail);
    }

    std::vector<char> eliminated(n, 0);
    std::vector<int> elim_pos(n, -1);
    std::vector<std::vector<Vertex>> bag_of(n);
    std::vector<Vertex> elim_order;
    elim_order.reserve(n);

    auto fill_in = [&](Vertex v) {
        int fill = 0;
        std::vector<Vertex> ns(nb[v].begin(), nb[v].end());
        for (size_t i = 0; i < ns.size(); ++i)
            for (size_t j = i + 1; j < ns.size(); ++j)
                if (!nb[ns[i]].count(ns[j])) ++fill;
        return fill;
    };

    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        int best_fill = 0;
        size_t best_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            int f = fill_in(v);
            if (best == -1 || f < best_fill || (f == best_fill && nb[v].size() < best_deg)) {
                best = v;
                best_fill = f;
                best_deg = nb[v].size();
            }
        }
        std::vector<Vertex> bag(nb[best].begin(), nb[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        bag_of[best] = std::move(bag);
        elim_pos[best] = step;
        elim_order.push_back(best);
        std::vector<Vertex> ns(nb[best].begin(), nb[best].end());
        for (size_t i = 0; i < ns.size(); ++i)
            for (size_t j = i + 1; j < ns.size(); ++j) {
                nb[ns[i]].insert(ns[j]);
                nb[ns[j]].insert(ns[i]);
            }
        for (Vertex u : ns) nb[u].erase(best);
        nb[best].clear();
        eliminated[best] = 1;
    }

    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<int> bag_index(n);
    for (Vertex v = 0; v < n; ++v) {
        bag_index[v] = v;  // bag i belongs to the i-th vertex id
        td.bags[v] = bag_of[v];
    }
    // Standard clique-tree wiring: attach the bag of v to the bag of the
    // earliest-eliminated later neighbor; roots of components chain up.
    std::vector<int> roots;
    for (Vertex v = 0; v < n; ++v) {
        Vertex parent = -1;
        for (Vertex u : td.bags[v])
            if (u != v && elim_pos[u] > elim_pos[v] &&
                (parent == -1 || elim_pos[u] < elim_pos[parent]))
                parent = u;
        if (parent != -1)
            td.tree_edges.emplace_back(v, parent);
        else
            roots.push_back(v);
    }
    for (size_t i = 0; i + 1 < roots.size(); ++i) td.tree_edges.emplace_back(roots[i], roots[i + 1]);
    return td;
}

int find_balanced_bag(const TreeDecomposition& td, const std::vector<Vertex>& active) {
    if (active.empty()) throw input_error("active set must be nonempty");
    const int nb = td.bag_count();
    if (nb == 0) throw structural_error("decomposition has no bags");

    std::vector<std::vector<int>> adj(nb);
    for (const auto& [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // Representative bag per active vertex (any bag holding it).
    int max_v = *std::max_element(active.begin(), active.end());
    std::vector<int> rep(max_v + 1, -1);
    for (int i = 0; i < nb; ++i)
        for (Vertex v : td.bags[i])
            if (v <= max_v && rep[v] == -1) rep[v] = i;
    for (Vertex v : active)
        if (rep[v] == -1) throw structural_error("active vertex is in no bag");

    const size_t half = active.size() / 2;  // components must have <= |active|/2
    std::vector<int> side(nb);
    std::vector<char> visited_bag(nb, 0);
    int cur = 0;
    for (int steps = 0; steps <= nb; ++steps) {
        // Label each tree node with the neighbor-side it falls on when
        // `cur` is removed; cur itself gets -1.
        std::fill(side.begin(), side.end(), -1);
        for (int nbr : adj[cur]) {
            if (side[nbr] != -1 || nbr == cur) continue;
            std::queue<int> q;
            q.push(nbr);
            side[nbr] = nbr;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[x])
                    if (y != cur && side[y] == -1) side[y] = nbr, q.push(y);
            }
        }
        const auto& bag = td.bags[cur];
        std::vector<std::pair<int, size_t>> counts;  // (side root, active count)
        for (Vertex v : active) {
            if (std::binary_search(bag.begin(), bag.end(), v)) continue;
            int s = side[rep[v]];
            auto it = std::find_if(counts.begin(), counts.end(),
                                   [&](const auto& c) { return c.first == s; });
            if (it == counts.end())
                counts.emplace_back(s, 1);
            else
                ++it->second;
        }
        int heavy = -2;
        for (const auto& [s, c] : counts)
            if (c > half) heavy = s;
        if (heavy == -2) return cur;
        if (heavy == -1) throw structural_error("bag graph is disconnected");
        if (visited_bag[cur]) throw structural_error("balanced-bag walk revisited a bag");
        visited_bag[cur] = 1;
        cur = heavy;
    }
    throw structural_error("balanced-bag walk did not terminate; decomposition invalid");
}

std::vector<std::vector<Vertex>> restrict_components(const WeightedDigraph& g,
                                                     const std::vector<Vertex>& active,
                                                     const std::vector<Vertex>& bag) {
    std::vector<char> in_active(g.n(), 0), in_bag(g.n(), 0);
    for (Vertex v : active) in_active[v] = 1;
    for (Vertex v : bag) {
        if (!in_active[v]) throw input_error("bag must be a subset of active");
        in_bag[v] = 1;
    }
    std::vector<char> seen(g.n(), 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> sorted_active = active;
    std::sort(sorted_active.begin(), sorted_active.end());
    for (Vertex s : sorted_active) {
        if (seen[s] || in_bag[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            auto visit = [&](Vertex v) {
                if (in_active[v] && !in_bag[v] && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
            };
            for (const auto& [v, w] : g.out(u)) visit(v);
            for (const auto& [v, w] : g.in(u)) visit(v);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace dagcover
