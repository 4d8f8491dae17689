#pragma once

#include <vector>

#include "dagcover/cover.hpp"
#include "dagcover/gadget.hpp"
#include "dagcover/graph.hpp"

namespace dagcover {

/// Union of per-center gadgets into one DAG over all of V. Every gadget
/// must order its members consistently with `perm`; each chain vertex is
/// placed immediately before its member so the merged declared order is
/// topological by construction. Steiner ids are assigned per gadget in
/// list order; steiner_base[i] is the first Steiner index of gadget i.
struct AssembledDag {
    SteinerDag dag;
    std::vector<int> steiner_base;
};

AssembledDag assemble_gadget_dag(int graph_n, const Permutation& perm,
                                 const std::vector<VertexGadget>& gadgets);

}  // namespace dagcover
