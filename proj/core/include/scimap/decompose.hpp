#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scimap/bicomponents.hpp"
#include "scimap/similarity.hpp"
#include "scimap/types.hpp"

namespace scimap {

inline constexpr std::array<double, 3> kDefaultLadder{0.8, 0.9, 0.95};
inline constexpr std::size_t kDefaultMaxComponentSize = 200;

// One cluster in the hierarchy. `vertices` are indices into ClusterTree::labels.
// When the node was split at the next ladder rung, `children` hold the retained
// sub-components (made disjoint: a vertex shared by several retained components
// is assigned to the largest, earliest one), `dropped` the members that lost all
// edges at the higher rung, and `unclustered` the members that kept edges but
// fell in no retained component. So vertices = U children + dropped + unclustered.
struct ClusterNode {
  double threshold = std::numeric_limits<double>::quiet_NaN();  // NaN for the root
  std::vector<VertexId> vertices;
  bool decomposed = false;
  bool ladder_exhausted = false;  // oversized but no rung left
  double child_threshold = std::numeric_limits<double>::quiet_NaN();
  std::vector<ClusterNode> children;  // ordered by size desc, then smallest label
  std::vector<VertexId> dropped;
  std::vector<VertexId> unclustered;
  ComponentStats stats_min3;      // every component of >= 3 vertices at child_threshold
  ComponentStats stats_retained;  // only components of >= min_size
  std::vector<VertexId> articulation_min3;
  std::vector<VertexId> articulation_retained;
};

struct ClusterTree {
  std::vector<double> ladder;
  std::size_t min_size = 3;
  std::size_t max_component_size = kDefaultMaxComponentSize;
  std::vector<std::string> labels;
  ClusterNode root;
};

// Splits the similarity graph at ladder[0] into bicomponents of >= min_size
// vertices, then recursively re-splits every component larger than
// max_component_size at the next rung. Similarity values are reused as-is at
// every rung; nothing is recomputed on sub-matrices.
ClusterTree decompose(const SimilarityMatrix& s, std::span<const double> ladder,
                      std::size_t min_size, std::size_t max_component_size);

struct ClassificationRow {
  std::string path;  // dotted numeric id, e.g. "15.6"
  std::string journal;
  double threshold = 0.0;
  std::size_t component_size = 0;

  bool operator==(const ClassificationRow&) const = default;
};

struct Classification {
  std::vector<ClassificationRow> rows;

  bool operator==(const Classification&) const = default;
};

// One row per journal at its deepest containing node, depth-first. Children are
// numbered 1, 2, ... in stored order; residuals of a split node are listed at
// the node's own path. Journals never assigned to any cluster produce no rows.
Classification classify(const ClusterTree& tree);

// CSV with header `path,journal,threshold,component_size`.
std::string classification_csv(const Classification& c);

// Journals that link two or more >= 3-vertex components among the nodes split
// at the given rung, sorted by label.
std::vector<JournalId> articulation_report(const ClusterTree& tree, double level);

// JSON document (schema tag "scimap-tree/1") with the label table and the full
// node hierarchy.
std::string tree_to_json(const ClusterTree& tree);

// Per-journal partition: vertices under top-level cluster k (1-based) map to k,
// everything else to 0.
std::vector<int> clu_from_tree(const ClusterTree& tree);

}  // namespace scimap
