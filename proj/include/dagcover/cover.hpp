#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dagcover/graph.hpp"

namespace dagcover {

// Relative tolerance absorbing float summation noise in distance
// comparisons (constructions sum O(n) exact weights).
inline constexpr double kStretchTol = 1e-9;

/// One DAG of a cover. Vertex references live in a combined id space:
/// ids < graph_n are original vertices of G, id graph_n + k is the k-th
/// Steiner vertex of this dag (serialized as "s:<dag>:<k>").
struct SteinerDag {
    int graph_n = 0;
    std::vector<Vertex> original_vertices;  // sorted subset of 0..graph_n-1
    int steiner_count = 0;
    std::vector<Edge> edges;                // weights >= 0; 0 only next to Steiner ids
    std::vector<Vertex> topo_order;         // declared order over all vertices

    bool is_original(Vertex v) const { return v < graph_n; }
    int vertex_count() const { return static_cast<int>(original_vertices.size()) + steiner_count; }
    bool contains_original(Vertex v) const;
};

struct Provenance {
    std::string construction;
    std::map<std::string, std::string> parameters;
    uint64_t seed = 0;
};

struct DagCover {
    std::vector<SteinerDag> dags;
    double stretch_target = 1.0;
    bool steiner = false;
    Provenance provenance;
};

struct DominatingWitness {
    int dag = 0;
    Vertex u = 0, v = 0;
    Weight dag_dist = 0;
    Weight graph_dist = 0;
};

struct StretchWitness {
    Vertex u = 0, v = 0;
    Weight best_dag_dist = 0;  // min over dags
    Weight graph_dist = 0;
};

struct DagStats {
    int64_t edge_count = 0;
    int64_t extra_edge_count = 0;
    int64_t steiner_count = 0;
    bool order_valid = false;
    bool acyclic = false;
    std::vector<Vertex> cycle_witness;  // combined-id closed walk when cyclic
};

struct CoverCertificate {
    bool structure_ok = true;
    std::string structure_witness;

    bool acyclic_ok = true;
    bool dominating_ok = true;
    std::optional<DominatingWitness> dominating_witness;

    bool stretch_ok = true;
    double max_stretch_ratio = 0.0;  // over reachable pairs; 0 when none
    std::optional<StretchWitness> stretch_witness;

    int64_t extra_edges = 0;
    int64_t steiner_vertices = 0;
    std::vector<DagStats> per_dag;

    bool pass() const { return structure_ok && acyclic_ok && dominating_ok && stretch_ok; }
};

/// Throws structural_error if the dag breaks its own invariants
/// (references, weights, declared order a permutation of its vertices).
/// Does NOT require acyclicity.
void validate_steiner_dag_structure(const SteinerDag& dag);

/// Shortest-path distances inside one dag from an original source to all
/// original vertices. Uses topological relaxation when the declared
/// order is consistent, Dijkstra otherwise.
std::vector<Weight> dag_distances_from(const SteinerDag& dag, Vertex source);

/// Dominating check: no dag underestimates a graph distance
/// (one-sided tolerance; UNREACHABLE in the dag dominates everything).
/// Structurally invalid dags raise structural_error.
std::optional<DominatingWitness> verify_dominating(const DistanceMatrix& gdist,
                                                   const DagCover& cover);

struct StretchResult {
    bool ok = true;
    double max_ratio = 0.0;
    std::optional<StretchWitness> witness;
};

/// Stretch check against target t: every reachable pair must be served
/// by some dag within t * d_G (relative tolerance kStretchTol).
StretchResult verify_stretch(const DistanceMatrix& gdist, const DagCover& cover, double t);

/// |union of dag edges \ E(G)| as ordered endpoint pairs; weights are
/// ignored and any Steiner-incident edge is automatically extra.
int64_t count_extra_edges(const WeightedDigraph& g, const DagCover& cover);

/// Runs acyclicity, dominating, stretch (against cover.stretch_target)
/// and sparsity accounting; never throws on mutated covers — failures
/// land in the certificate.
CoverCertificate certify(const WeightedDigraph& g, const DagCover& cover, int threads = 1);

/// Recompute the violation a witness describes; true when it still fails
/// the same way (used to confirm reported witnesses are replayable).
bool replay_dominating_witness(const WeightedDigraph& g, const DagCover& cover,
                               const DominatingWitness& w);
bool replay_stretch_witness(const WeightedDigraph& g, const DagCover& cover, double t,
                            const StretchWitness& w);

}  // namespace dagcover
