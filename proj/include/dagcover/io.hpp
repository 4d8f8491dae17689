#pragma once

#include <string>

#include "dagcover/cover.hpp"
#include "dagcover/decomposition.hpp"
#include "dagcover/graph.hpp"
#include "dagcover/path_cover.hpp"
#include "dagcover/planar.hpp"

namespace dagcover {

// Graph text format: "n m" header, then "tail head weight" lines,
// 0-based ids; '#' starts a comment line.
std::string write_graph_text(const WeightedDigraph& g);
WeightedDigraph read_graph_text(const std::string& text);

// PACE-style .td: "s td <bags> <width+1> <n>", "b <index> <v...>"
// (1-based in the file), then tree edges; 'c' lines are comments.
std::string write_td(const TreeDecomposition& td, int n);
TreeDecomposition read_td(const std::string& text);

// Embedding format: one line per vertex, "v: <neighbors in cyclic order>".
std::string write_embedding(const PlanarEmbedding& emb);
PlanarEmbedding read_embedding(const std::string& text);

// Cover JSON (format 1): originals as integers, Steiner vertices as
// "s:<dag>:<k>" strings. Byte-stable for a fixed cover.
std::string write_cover_json(const DagCover& cover, int graph_n);
DagCover read_cover_json(const std::string& text);

// Path cover JSON (format 1).
std::string write_path_cover_json(const PathCover& pc);
PathCover read_path_cover_json(const std::string& text);

// Certificate report JSON.
std::string write_certificate_json(const CoverCertificate& cert);

// Graphviz dot of one dag (combined ids; Steiner nodes named s<k>).
std::string write_dag_dot(const SteinerDag& dag, const std::string& name);

// File helpers.
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);

}  // namespace dagcover
