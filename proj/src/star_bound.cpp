#include "dagcover/star_bound.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "dagcover/generators.hpp"

namespace dagcover {

double star_lower_bound(int n, int64_t mu) {
    if (n < 2) throw input_error("star lower bound needs n >= 2");
    if (mu < 0) throw input_error("mu must be non-negative");
    double leaves = static_cast<double>(n - 1);
    return std::log2(leaves * leaves / (2.0 * static_cast<double>(mu) + leaves) + 1.0);
}

StarCoverAnalysis analyze_star_cover(int n, const DagCover& cover) {
    if (cover.steiner) throw input_error("star analysis requires a non-Steiner cover");
    for (const SteinerDag& d : cover.dags)
        if (d.steiner_count != 0) throw input_error("star analysis requires a non-Steiner cover");
    if (cover.stretch_target >= 2.0)
        throw input_error("star analysis requires stretch target < 2");

    WeightedDigraph star = make_bidirected_star(n);
    CoverCertificate cert = certify(star, cover);
    if (!cert.pass()) throw input_error("star analysis requires a certified cover");

    StarCoverAnalysis res;
    res.n = n;
    res.dag_count = static_cast<int>(cover.dags.size());
    res.mu = cert.extra_edges;
    res.bound = star_lower_bound(n, res.mu);

    // Codeword B_i per leaf: bit k = 1 iff dag k contains edge (v_i, rt).
    res.codewords.assign(n, {});
    for (Vertex leaf = 1; leaf < n; ++leaf) {
        std::vector<int> word(res.dag_count, 0);
        for (int k = 0; k < res.dag_count; ++k)
            for (const Edge& e : cover.dags[k].edges)
                if (e.tail == leaf && e.head == 0) {
                    word[k] = 1;
                    break;
                }
        res.codewords[leaf] = std::move(word);
    }

    // Q: unordered leaf pairs with no direct edge between them, in either
    // direction, in any dag.
    std::set<std::pair<Vertex, Vertex>> direct;
    for (const SteinerDag& d : cover.dags)
        for (const Edge& e : d.edges)
            if (e.tail >= 1 && e.head >= 1)
                direct.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));
    for (Vertex i = 1; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!direct.count({i, j})) res.q_pairs.emplace_back(i, j);

    // |Q| >= C(n-1, 2) - mu: each extra edge removes at most one pair.
    int64_t leaf_pairs = static_cast<int64_t>(n - 1) * (n - 2) / 2;
    if (static_cast<int64_t>(res.q_pairs.size()) < leaf_pairs - res.mu) {
        std::ostringstream os;
        os << "|Q| = " << res.q_pairs.size() << " < C(n-1,2) - mu = " << (leaf_pairs - res.mu);
        res.counterexample = os.str();
        return res;
    }

    for (const auto& [i, j] : res.q_pairs) {
        if (res.codewords[i] == res.codewords[j]) {
            std::ostringstream os;
            os << "pair {" << i << "," << j << "} in Q has identical codewords";
            res.counterexample = os.str();
            return res;
        }
    }

    if (static_cast<double>(res.dag_count) < res.bound - 1e-12) {
        std::ostringstream os;
        os << "dag count " << res.dag_count << " below bound " << res.bound;
        res.counterexample = os.str();
        return res;
    }
    res.consistent = true;
    return res;
}

}  // namespace dagcover
