#include "dagcover/planar.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace dagcover {

EmbeddingReport validate_embedding(const WeightedDigraph& g, const PlanarEmbedding& emb) {
    const int n = g.n();
    if (static_cast<int>(emb.rotation.size()) != n)
        throw structural_error("rotation system must list every vertex");

    // Underlying neighbor sets.
    std::vector<std::set<Vertex>> nb(n);
    for (const Edge& e : g.edges()) {
        nb[e.tail].insert(e.head);
        nb[e.head].insert(e.tail);
    }
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> listed(emb.rotation[v].begin(), emb.rotation[v].end());
        if (listed.size() != emb.rotation[v].size() || listed != nb[v])
            throw structural_error("rotation list disagrees with the edge set at vertex " +
                                   std::to_string(v));
    }

    // Successor lookup: position of each neighbor in the rotation.
    std::vector<std::map<Vertex, int>> pos(n);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i)
            pos[v][emb.rotation[v][i]] = i;

    // Component labels over the underlying graph.
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = comp_count;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : nb[u])
                if (comp[w] == -1) comp[w] = comp_count, q.push(w);
        }
        ++comp_count;
    }

    // Face traversal: dart (u,v) continues with (v, w) where w follows u
    // in the rotation of v.
    std::set<std::pair<Vertex, Vertex>> darts;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : nb[v]) darts.emplace(v, w);
    std::set<std::pair<Vertex, Vertex>> used;
    std::vector<int> faces(comp_count, 0);
    for (const auto& start : darts) {
        if (used.count(start)) continue;
        auto dart = start;
        do {
            used.insert(dart);
            auto [u, v] = dart;
            int i = pos[v].at(u);
            Vertex w = emb.rotation[v][(i + 1) % emb.rotation[v].size()];
            dart = {v, w};
        } while (dart != start);
        ++faces[comp[start.first]];
    }

    std::vector<int> verts(comp_count, 0), edgs(comp_count, 0);
    for (Vertex v = 0; v < n; ++v) ++verts[comp[v]];
    for (const auto& [u, v] : darts)
        if (u < v) ++edgs[comp[u]];

    EmbeddingReport rep;
    for (int c = 0; c < comp_count; ++c) {
        if (verts[c] == 1 && edgs[c] == 0) faces[c] = 1;  // isolated vertex
        rep.faces += faces[c];
        if (verts[c] - edgs[c] + faces[c] != 2) {
            rep.ok = false;
            if (rep.witness.empty()) {
                std::ostringstream os;
                os << "component " << c << ": V - E + F = " << verts[c] << " - " << edgs[c]
                   << " + " << faces[c] << " != 2";
                rep.witness = os.str();
            }
        }
    }
    return rep;
}

}  // namespace dagcover
