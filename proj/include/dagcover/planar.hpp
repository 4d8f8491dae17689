#pragma once

#include <string>
#include <vector>

#include "dagcover/graph.hpp"

namespace dagcover {

/// Combinatorial embedding: per vertex, the cyclic order of its
/// underlying (undirected) neighbors.
struct PlanarEmbedding {
    std::vector<std::vector<Vertex>> rotation;  // rotation[v] = neighbors in cyclic order
};

struct EmbeddingReport {
    bool ok = true;
    int faces = 0;          // total over all components
    std::string witness;    // failing component / inconsistency
};

/// Face traversal + Euler formula check (n - m + f = 2 per connected
/// component). Rotation lists that disagree with the edge set throw
/// structural_error.
EmbeddingReport validate_embedding(const WeightedDigraph& g, const PlanarEmbedding& emb);

}  // namespace dagcover
