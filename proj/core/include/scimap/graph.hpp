#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scimap/citation_matrix.hpp"
#include "scimap/similarity.hpp"
#include "scimap/types.hpp"

namespace scimap {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

// Undirected simple graph with labelled vertices and weighted edges.
class SimilarityGraph {
 public:
  SimilarityGraph() = default;
  explicit SimilarityGraph(std::vector<std::string> labels, double threshold = 0.0);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  double threshold() const { return threshold_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }

  // Adds edge (u, v); endpoints are normalised so u < v. Throws on self loops,
  // out-of-range endpoints, or duplicate edges (detected at finalize()).
  void add_edge(VertexId u, VertexId v, double weight = 1.0);
  void finalize();

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_edge(VertexId u, VertexId v) const;
  double edge_weight(VertexId u, VertexId v) const;  // 0 if absent

  bool operator==(const SimilarityGraph& other) const;

 private:
  std::vector<std::string> labels_;
  double threshold_ = 0.0;
  std::vector<Edge> edges_;           // sorted by (u, v) after finalize
  std::vector<VertexId> adjacency_;   // CSR neighbour lists
  std::vector<std::size_t> offsets_;  // size n + 1
  bool finalized_ = false;
};

// Keeps every pair with a defined similarity >= r_min. Ties are kept.
SimilarityGraph threshold_graph(const SimilarityMatrix& sim, double r_min);

// Symmetrised view of a citation matrix: edge iff max(c_ij, c_ji) >= min_count,
// weighted by that maximum. Self citations are ignored.
SimilarityGraph citation_graph(const CitationMatrix& m, long long min_count = 1);

struct DegreeSummary {
  std::vector<std::size_t> degrees;  // per vertex
  std::size_t connected_count = 0;   // vertices with degree >= 1
  std::size_t max_degree = 0;
};

DegreeSummary degree_summary(const SimilarityGraph& g);

// Induced subgraph on the given vertices. Vertex i of the result corresponds to
// the i-th smallest input vertex; labels and edge weights carry over.
SimilarityGraph extract_subgraph(const SimilarityGraph& g, std::span<const VertexId> vertices);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const SimilarityGraph& g);

}  // namespace scimap
