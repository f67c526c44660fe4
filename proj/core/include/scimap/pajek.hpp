#pragma once

#include <string>
#include <vector>

#include "scimap/citation_matrix.hpp"
#include "scimap/graph.hpp"
#include "scimap/types.hpp"

namespace scimap {

// In-memory Pajek .net file. Endpoints are 0-based here; the text format is
// 1-based. Edges are undirected, arcs directed.
struct PajekNetwork {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<Edge> arcs;

  bool operator==(const PajekNetwork&) const = default;
};

// Canonical form: `*Vertices n`, all vertex lines with quoted labels, then
// `*Edges` and/or `*Arcs` sections (omitted when empty), entries sorted by
// endpoints ascending, weights in up-to-6-significant-digit decimal, `\n` line
// endings.
std::string write_pajek_net(const PajekNetwork& net);
PajekNetwork read_pajek_net(const std::string& text);

PajekNetwork pajek_from_graph(const SimilarityGraph& g);
PajekNetwork pajek_from_matrix(const CitationMatrix& m);
SimilarityGraph graph_from_pajek(const PajekNetwork& net, double threshold = 0.0);
CitationMatrix matrix_from_pajek(const PajekNetwork& net);

// `*Vertices n` then one integer cluster id per vertex line.
std::string write_pajek_clu(const std::vector<int>& partition);
std::vector<int> read_pajek_clu(const std::string& text);

}  // namespace scimap
