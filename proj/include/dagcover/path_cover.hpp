#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dagcover/config.hpp"
#include "dagcover/graph.hpp"
#include "dagcover/planar.hpp"

namespace dagcover {

struct PortalEntry {
    Vertex portal = 0;       // vertex on the path
    Weight dist_to = 0;      // d_G(v, portal)
    Weight dist_from = 0;    // d_G(portal, v)
};

/// Separator-path structure: dipaths P, per-vertex path lists P[v], and
/// eps-covering portal sets C(v,P). Self-contained: along-path prefix
/// sums are stored so contract checks need only a distance oracle.
struct PathCover {
    double eps = 0.5;
    std::vector<std::vector<Vertex>> paths;          // vertex sequences, consecutive G-edges
    std::vector<std::vector<Weight>> path_prefix;    // prefix sums of edge weights, size |P|
    std::vector<std::vector<int>> vertex_paths;      // per vertex: sorted path ids
    // covering[v]: (path id, portal entries sorted by position on path)
    std::vector<std::vector<std::pair<int, std::vector<PortalEntry>>>> covering;

    int path_count() const { return static_cast<int>(paths.size()); }
    // Position of a vertex on a path, -1 when absent.
    int position_on(int path_id, Vertex v) const;
    // Along-path distance between positions (UNREACHABLE if j < i).
    Weight path_distance(int path_id, int i, int j) const;
};

/// Builds the separator-path cover: per weakly connected skeleton
/// component, recursive balanced separation by shortest-path-tree root
/// paths, each decomposed into maximal forward dipath pieces; every
/// vertex of a recursion node associates with that node's pieces, and
/// portal sets are selected greedily on both sides at factor (1+eps).
PathCover build_path_cover(const WeightedDigraph& g, const PlanarEmbedding& emb, double eps);

/// Structural checks: paths are dipaths of G with matching prefix sums,
/// all portals lie on their paths. Throws structural_error on failure.
void validate_path_cover(const WeightedDigraph& g, const PathCover& pc);

struct ContractResult {
    bool ok = true;
    double max_ratio = 0.0;  // worst min-triple ratio over reachable pairs
    Vertex worst_u = -1, worst_v = -1;
    std::string witness;
};

/// Brute-force check of the coverage contract over all reachable pairs:
/// some shared path plus portals must realize (1+eps) * d_G(u,v). Also
/// re-checks every stored portal distance against the oracle.
ContractResult verify_path_cover_contract(const DistanceMatrix& gdist, const PathCover& pc);

struct ContractTriple {
    int path = -1;
    Vertex u_portal = -1, v_portal = -1;
    Weight value = kUnreachable;  // d(u,u') + d_P(u',v') + d(v',v)
};

/// The minimizing (path, portal, portal) triple for one pair, if any.
std::optional<ContractTriple> best_contract_triple(const PathCover& pc, Vertex u, Vertex v);

/// Size accounting used by tests: max |P[v]| and max |C(v,P)|.
struct PathCoverStats {
    size_t max_paths_per_vertex = 0;
    size_t max_portals_per_set = 0;
    size_t total_path_vertices = 0;
};
PathCoverStats path_cover_stats(const PathCover& pc);

}  // namespace dagcover
