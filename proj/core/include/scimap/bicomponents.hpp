#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "scimap/graph.hpp"
#include "scimap/types.hpp"

namespace scimap {

// Result of splitting a graph into bi-connected components. Components with
// three or more vertices go to `components`; single-edge components are kept
// apart in `bigraph_pairs` so that both the classical and the >= 3 views stay
// recoverable. Vertex lists are sorted; components are in lexicographic order.
struct BicomponentDecomposition {
  std::vector<std::vector<VertexId>> components;
  std::vector<std::pair<VertexId, VertexId>> bigraph_pairs;
  std::vector<VertexId> articulation_points;  // members of >= 2 edge-level components
  std::vector<VertexId> isolates;             // degree 0

  bool operator==(const BicomponentDecomposition&) const = default;
};

struct ComponentStats {
  std::map<std::size_t, std::size_t> size_histogram;
  std::size_t n_components = 0;
  std::size_t n_articulation_points = 0;
  std::size_t n_journals_covered = 0;  // |union of component vertex sets|
  std::size_t largest_size = 0;

  bool operator==(const ComponentStats&) const = default;
};

// Hopcroft-Tarjan with an explicit stack; linear in vertices + edges.
BicomponentDecomposition bicomponents(const SimilarityGraph& g);

// Vertex-removal articulation check: v is returned iff deleting it splits its
// connected component. Quadratic; meant as an independent cross-check.
std::vector<VertexId> articulation_oracle(const SimilarityGraph& g);

// Drops components below min_size and recomputes articulation points as the
// vertices shared by >= 2 retained components. Pairs and isolates pass through.
BicomponentDecomposition filter_components(const BicomponentDecomposition& d, std::size_t min_size);

ComponentStats size_distribution(const BicomponentDecomposition& d);

}  // namespace scimap
