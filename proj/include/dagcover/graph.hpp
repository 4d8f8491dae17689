#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "dagcover/errors.hpp"

namespace dagcover {

using Vertex = int;
using Weight = double;

// Explicit sentinel for "no dipath". Infinity is branch-distinguishable
// (==, std::isinf) and never arises from finite positive-weight sums at
// the scales this library targets.
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::infinity();

inline bool reachable(Weight d) { return d != kUnreachable; }

struct Edge {
    Vertex tail = 0;
    Vertex head = 0;
    Weight weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple weighted digraph on dense vertex ids 0..n-1. No self-loops,
/// strictly positive finite weights, at most one edge per ordered pair
/// (parallel edges collapse to the minimum weight on construction).
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Outgoing (head, weight) pairs per vertex.
    const std::vector<std::pair<Vertex, Weight>>& out(Vertex v) const { return adj_[v]; }
    // Incoming (tail, weight) pairs per vertex.
    const std::vector<std::pair<Vertex, Weight>>& in(Vertex v) const { return radj_[v]; }

    bool has_edge(Vertex tail, Vertex head) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, Weight>>> adj_;
    std::vector<std::vector<std::pair<Vertex, Weight>>> radj_;
};

/// A permutation of 0..n-1 together with its inverse (position lookup).
struct Permutation {
    std::vector<Vertex> order;   // order[k] = vertex at position k
    std::vector<int> inverse;    // inverse[v] = position of v

    static Permutation identity(int n);
    static Permutation from_order(std::vector<Vertex> order);
    Permutation reversed() const;

    int n() const { return static_cast<int>(order.size()); }
    int position(Vertex v) const { return inverse[v]; }
};

struct DistanceMatrix {
    int n = 0;
    std::vector<Weight> data;  // row-major n*n

    Weight operator()(Vertex u, Vertex v) const { return data[static_cast<size_t>(u) * n + v]; }
    Weight& at(Vertex u, Vertex v) { return data[static_cast<size_t>(u) * n + v]; }
};

/// Exact single-source shortest-path distances (Dijkstra). Ties between
/// equal-length paths resolve to the lexicographically smallest
/// predecessor so downstream constructions are reproducible.
std::vector<Weight> single_source_distances(const WeightedDigraph& g, Vertex source);

/// Distances plus the deterministic predecessor array (-1 for source and
/// unreached vertices).
struct ShortestPathTree {
    std::vector<Weight> dist;
    std::vector<Vertex> parent;
};
ShortestPathTree single_source_tree(const WeightedDigraph& g, Vertex source);

/// Distances INTO target (Dijkstra on the reversed graph).
std::vector<Weight> single_target_distances(const WeightedDigraph& g, Vertex target);

/// All-pairs matrix; row v equals single_source_distances(g, v).
/// threads > 1 computes rows concurrently (result is identical).
DistanceMatrix all_pairs_distances(const WeightedDigraph& g, int threads = 1);

/// max finite d(u,v) / min finite d(u,v) over ordered pairs u != v with
/// u reaching v. Throws input_error when no such pair exists.
double aspect_ratio(const DistanceMatrix& d);

/// Rescale so the minimum edge weight is 1; returns the graph and the
/// scale factor that restores original distances. No edges: scale 1.
std::pair<WeightedDigraph, double> normalize_weights(const WeightedDigraph& g);

/// Result of an acyclicity check over an explicit edge list.
struct AcyclicityResult {
    bool is_dag = false;
    std::vector<Vertex> order;  // valid topological order when is_dag
    std::vector<Vertex> cycle;  // closed walk (first == last) otherwise
};

/// Kahn's algorithm with a min-id heap (so the order is the
/// lexicographically smallest one); on failure returns a directed cycle
/// found among the remaining vertices.
AcyclicityResult check_acyclic_and_order(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

/// Distances within the subgraph induced on `active` (must be sorted).
/// Returned vectors are indexed by global vertex id; vertices outside
/// `active` stay kUnreachable.
std::vector<Weight> induced_source_distances(const WeightedDigraph& g,
                                             const std::vector<Vertex>& active, Vertex source);
std::vector<Weight> induced_target_distances(const WeightedDigraph& g,
                                             const std::vector<Vertex>& active, Vertex target);

}  // namespace dagcover
