#include "dagcover/tw_nonsteiner.hpp"

#include <algorithm>
#include <cmath>

namespace dagcover {

int nonsteiner_dag_count(int n) {
    if (n <= 0) return 0;
    int bits = 0;
    while ((1LL << bits) < n + 1) ++bits;
    return 2 * bits;
}

CodewordFamily make_codewords(int count, int n) {
    if (count > n) throw input_error("cannot build more codewords than n");
    if (count < 0 || n < 1) throw input_error("codeword parameters out of range");
    int field = 0;
    while ((1LL << field) < n + 1) ++field;
    CodewordFamily fam;
    fam.length = 2 * field;
    fam.words.resize(count);
    for (int i = 1; i <= count; ++i) {
        std::vector<int>& w = fam.words[i - 1];
        w.assign(fam.length, 0);
        long long first = i - 1, second = n - (i - 1);
        for (int b = 0; b < field; ++b) {
            w[field - 1 - b] = static_cast<int>((first >> b) & 1);
            w[2 * field - 1 - b] = static_cast<int>((second >> b) & 1);
        }
    }
    return fam;
}

namespace {

// Per-vertex routing bits. Vertex v gets codeword rank n-1-v, so for
// every ordered pair some dag has the tail on the 1 side and the head
// on the 0 side (antichain property). Word positions are permuted so
// that dag 0 reads the first field's top bit (non-increasing in vertex
// id) and dag 1 the second field's top bit (non-decreasing): those are
// the only two dags carrying intra-bag edges, and the monotonicity
// keeps their ascending/descending bag orders consistent with the
// membership split at every recursion level.
struct VertexBits {
    CodewordFamily words;
    std::vector<int> dag_position;  // dag index -> word position
    int n = 0;

    explicit VertexBits(int n_) : n(n_) {
        words = make_codewords(n, n);
        const int L = words.length;
        const int field = L / 2;
        dag_position.reserve(L);
        dag_position.push_back(0);      // field-1 top bit
        dag_position.push_back(field);  // field-2 top bit
        for (int p = 1; p < field; ++p) dag_position.push_back(p);
        for (int p = field + 1; p < L; ++p) dag_position.push_back(p);
    }

    bool before_bag(Vertex v, int dag) const {
        return words.bit(n - 1 - v, dag_position[dag]);
    }
};

// Edges plus a layered topological order, all in global vertex ids.
struct LocalDag {
    std::vector<Edge> edges;
    std::vector<Vertex> order;
};

// Builds all dags of the cover restricted to G[active]. Every level
// emits cross edges between the active separator bag and the rest of
// the active set, directed by each vertex's routing bit, weighted by
// the one global APSP.
std::vector<LocalDag> build_recursive(const WeightedDigraph& g, const DistanceMatrix& gdist,
                                      const TreeDecomposition& td, const VertexBits& bits,
                                      const std::vector<Vertex>& active) {
    const int dag_count = nonsteiner_dag_count(bits.n);
    std::vector<LocalDag> dags(dag_count);
    if (active.size() <= 1) {
        for (LocalDag& d : dags) d.order = active;
        return dags;
    }

    int bag_idx = find_balanced_bag(td, active);
    const auto& full_bag = td.bags[bag_idx];
    std::vector<Vertex> bag;
    for (Vertex v : active)
        if (std::binary_search(full_bag.begin(), full_bag.end(), v)) bag.push_back(v);
    auto comps = restrict_components(g, active, bag);

    std::vector<std::vector<LocalDag>> child(comps.size());
    for (size_t j = 0; j < comps.size(); ++j)
        child[j] = build_recursive(g, gdist, td, bits, comps[j]);

    for (int i = 0; i < dag_count; ++i) {
        LocalDag& d = dags[i];
        // Order: 1-side parts of every component, the bag, 0-side parts.
        // Splitting a child order by the routing bit keeps it topological:
        // no edge of the child ever runs from a 0-vertex to a 1-vertex.
        for (size_t j = 0; j < comps.size(); ++j) {
            d.edges.insert(d.edges.end(), child[j][i].edges.begin(), child[j][i].edges.end());
            for (Vertex v : child[j][i].order)
                if (bits.before_bag(v, i)) d.order.push_back(v);
        }
        if (i == 1)
            d.order.insert(d.order.end(), bag.rbegin(), bag.rend());
        else
            d.order.insert(d.order.end(), bag.begin(), bag.end());
        for (size_t j = 0; j < comps.size(); ++j)
            for (Vertex v : child[j][i].order)
                if (!bits.before_bag(v, i)) d.order.push_back(v);

        // Cross edges with exact global distances; unreachable omitted.
        for (size_t j = 0; j < comps.size(); ++j) {
            for (Vertex c : comps[j]) {
                for (Vertex b : bag) {
                    if (bits.before_bag(c, i)) {
                        Weight w = gdist(c, b);
                        if (reachable(w)) d.edges.push_back({c, b, w});
                    } else {
                        Weight w = gdist(b, c);
                        if (reachable(w)) d.edges.push_back({b, c, w});
                    }
                }
            }
        }
        // Intra-bag edges: forward in dag 0, backward in dag 1.
        if (i == 0) {
            for (size_t x = 0; x < bag.size(); ++x)
                for (size_t y = x + 1; y < bag.size(); ++y) {
                    Weight w = gdist(bag[x], bag[y]);
                    if (reachable(w)) d.edges.push_back({bag[x], bag[y], w});
                }
        } else if (i == 1) {
            for (size_t x = 0; x < bag.size(); ++x)
                for (size_t y = x + 1; y < bag.size(); ++y) {
                    Weight w = gdist(bag[y], bag[x]);
                    if (reachable(w)) d.edges.push_back({bag[y], bag[x], w});
                }
        }
    }
    return dags;
}

}  // namespace

DagCover build_tw_nonsteiner_cover(const WeightedDigraph& g, const TreeDecomposition& td) {
    ValidationReport rep = validate_decomposition(g, td);
    if (!rep.ok()) throw structural_error("invalid tree decomposition: " + rep.witness);

    DagCover cover;
    cover.stretch_target = 1.0;
    cover.steiner = false;
    cover.provenance.construction = "tw-nonsteiner";
    cover.provenance.parameters["width"] = std::to_string(td.width());

    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    std::vector<LocalDag> dags;
    if (g.n() > 0) {
        DistanceMatrix gdist = all_pairs_distances(g);
        VertexBits bits(g.n());
        dags = build_recursive(g, gdist, td, bits, all);
    }

    for (LocalDag& d : dags) {
        SteinerDag sd;
        sd.graph_n = g.n();
        sd.original_vertices = all;
        sd.steiner_count = 0;
        sd.edges = std::move(d.edges);
        sd.topo_order = std::move(d.order);
        cover.dags.push_back(std::move(sd));
    }
    return cover;
}

}  // namespace dagcover
