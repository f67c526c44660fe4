#pragma once

#include <string>
#include <vector>

#include "scimap/graph.hpp"
#include "scimap/layout.hpp"
#include "scimap/types.hpp"

namespace scimap {

struct RenderOptions {
  double vertex_radius = 4.0;
  bool draw_labels = false;
  std::vector<VertexId> highlight;  // drawn white with a dark stroke
  double width = 1000.0;
  double height = 1000.0;
};

// Deterministic SVG: edges first, then one circle per vertex, then optional
// labels, all in index order. Vertices are colored by their partition id when
// a partition is given; highlighted vertices are always white-filled.
std::string render_svg(const SimilarityGraph& g, const Layout& layout,
                       const std::vector<int>* partition = nullptr,
                       const RenderOptions& options = {});

}  // namespace scimap
