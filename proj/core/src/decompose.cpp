#include "scimap/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

#include "scimap/format.hpp"
#include "scimap/graph.hpp"

namespace scimap {

namespace {

// Threshold graph induced on `vertices` (sorted, global ids); local vertex i is
// vertices[i].
SimilarityGraph subset_threshold_graph(const SimilarityMatrix& s,
                                       const std::vector<VertexId>& vertices, double r_min) {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (VertexId v : vertices) labels.push_back(s.label(v));
  SimilarityGraph g(std::move(labels), r_min);
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (s.defined(vertices[a], vertices[b]) && s.value(vertices[a], vertices[b]) >= r_min)
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b),
                   s.value(vertices[a], vertices[b]));
    }
  }
  g.finalize();
  return g;
}

std::vector<VertexId> to_global(const std::vector<VertexId>& local,
                                const std::vector<VertexId>& vertices) {
  std::vector<VertexId> out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(vertices[v]);
  return out;
}

void split_node(const SimilarityMatrix& s, ClusterNode& node, std::span<const double> ladder,
                std::size_t rung, std::size_t min_size, std::size_t max_size) {
  const double r = ladder[rung];
  node.decomposed = true;
  node.child_threshold = r;

  SimilarityGraph g = subset_threshold_graph(s, node.vertices, r);
  BicomponentDecomposition all = bicomponents(g);
  BicomponentDecomposition floor3 = filter_components(all, 3);
  BicomponentDecomposition retained = filter_components(all, std::max<std::size_t>(min_size, 3));

  node.stats_min3 = size_distribution(floor3);
  node.stats_retained = size_distribution(retained);
  node.articulation_min3 = to_global(floor3.articulation_points, node.vertices);
  node.articulation_retained = to_global(retained.articulation_points, node.vertices);
  node.dropped = to_global(all.isolates, node.vertices);

  const std::size_t n = node.vertices.size();
  // Home each vertex into one retained component: the largest it belongs to,
  // ties to the earlier one, so child vertex sets partition the clustered set.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> home(n, kNone);
  for (std::size_t c = 0; c < retained.components.size(); ++c) {
    for (VertexId v : retained.components[c]) {
      if (home[v] == kNone || retained.components[c].size() > retained.components[home[v]].size())
        home[v] = c;
    }
  }
  std::vector<std::vector<VertexId>> child_sets(retained.components.size());
  for (VertexId v = 0; v < n; ++v)
    if (home[v] != kNone) child_sets[home[v]].push_back(v);

  std::vector<bool> clustered(n, false);
  for (const auto& c : retained.components)
    for (VertexId v : c) clustered[v] = true;
  std::vector<bool> isolated(n, false);
  for (VertexId v : all.isolates) isolated[v] = true;
  for (VertexId v = 0; v < n; ++v)
    if (!clustered[v] && !isolated[v]) node.unclustered.push_back(node.vertices[v]);

  for (auto& cs : child_sets) {
    if (cs.empty()) continue;
    ClusterNode child;
    child.threshold = r;
    child.vertices = to_global(cs, node.vertices);
    node.children.push_back(std::move(child));
  }
  // classification order: larger first, ties by smallest member label
  std::sort(node.children.begin(), node.children.end(),
            [&](const ClusterNode& a, const ClusterNode& b) {
              if (a.vertices.size() != b.vertices.size())
                return a.vertices.size() > b.vertices.size();
              auto smallest = [&](const ClusterNode& c) {
                const std::string* best = &s.label(c.vertices.front());
                for (VertexId v : c.vertices)
                  if (s.label(v) < *best) best = &s.label(v);
                return best;
              };
              return *smallest(a) < *smallest(b);
            });

  for (auto& child : node.children) {
    if (child.vertices.size() <= max_size) continue;
    if (rung + 1 < ladder.size()) {
      split_node(s, child, ladder, rung + 1, min_size, max_size);
    } else {
      child.ladder_exhausted = true;
    }
  }
}

}  // namespace

ClusterTree decompose(const SimilarityMatrix& s, std::span<const double> ladder,
                      std::size_t min_size, std::size_t max_component_size) {
  if (ladder.empty()) throw InputError("threshold ladder is empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > -1.0) || !(ladder[i] <= 1.0))
      throw InputError("ladder value out of range (-1, 1]: " + format_number(ladder[i]));
    if (i > 0 && !(ladder[i] > ladder[i - 1])) throw InputError("ladder must be strictly ascending");
  }
  if (min_size < 3) throw InputError("min_size must be >= 3");

  ClusterTree tree;
  tree.ladder.assign(ladder.begin(), ladder.end());
  tree.min_size = min_size;
  tree.max_component_size = max_component_size;
  tree.labels = s.labels();
  tree.root.vertices.resize(s.size());
  for (VertexId v = 0; v < s.size(); ++v) tree.root.vertices[v] = v;
  split_node(s, tree.root, ladder, 0, min_size, max_component_size);
  return tree;
}

namespace {

void classify_node(const ClusterTree& tree, const ClusterNode& node, const std::string& path,
                   Classification& out) {
  auto label_sorted = [&](std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end(),
              [&](VertexId a, VertexId b) { return tree.labels[a] < tree.labels[b]; });
    return ids;
  };
  const bool is_root = path.empty();
  if (!is_root) {
    std::vector<VertexId> own;  // deepest containing node is this one
    if (node.decomposed) {
      own = node.dropped;
      own.insert(own.end(), node.unclustered.begin(), node.unclustered.end());
    } else {
      own = node.vertices;
    }
    for (VertexId v : label_sorted(std::move(own)))
      out.rows.push_back({path, tree.labels[v], node.threshold, node.vertices.size()});
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::string child_path = is_root ? std::to_string(i + 1) : path + "." + std::to_string(i + 1);
    classify_node(tree, node.children[i], child_path, out);
  }
}

}  // namespace

Classification classify(const ClusterTree& tree) {
  Classification out;
  classify_node(tree, tree.root, "", out);
  return out;
}

std::string classification_csv(const Classification& c) {
  std::string out = "path,journal,threshold,component_size\n";
  for (const auto& row : c.rows) {
    if (row.journal.find_first_of(",\r\n") != std::string::npos)
      throw InputError("journal label not representable in CSV: " + row.journal);
    out += row.path;
    out += ',';
    out += row.journal;
    out += ',';
    out += format_number(row.threshold);
    out += ',';
    out += std::to_string(row.component_size);
    out += '\n';
  }
  return out;
}

namespace {

void collect_articulation(const ClusterNode& node, double level, std::vector<VertexId>& acc,
                          bool& found) {
  if (node.decomposed && node.child_threshold == level) {
    found = true;
    acc.insert(acc.end(), node.articulation_min3.begin(), node.articulation_min3.end());
  }
  for (const auto& child : node.children) collect_articulation(child, level, acc, found);
}

}  // namespace

std::vector<JournalId> articulation_report(const ClusterTree& tree, double level) {
  std::vector<VertexId> acc;
  bool found = false;
  collect_articulation(tree.root, level, acc, found);
  if (!found) throw InputError("no node was split at threshold " + format_number(level));
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  std::vector<JournalId> out;
  out.reserve(acc.size());
  for (VertexId v : acc) out.push_back({v, tree.labels[v]});
  std::sort(out.begin(), out.end(),
            [](const JournalId& a, const JournalId& b) { return a.label < b.label; });
  return out;
}

namespace {

nlohmann::ordered_json stats_to_json(const ComponentStats& s) {
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto& [size, count] : s.size_histogram) histogram[std::to_string(size)] = count;
  return {{"components", s.n_components},
          {"journals", s.n_journals_covered},
          {"articulation_points", s.n_articulation_points},
          {"largest", s.largest_size},
          {"histogram", std::move(histogram)}};
}

nlohmann::ordered_json node_to_json(const ClusterNode& node, const std::string& path) {
  nlohmann::ordered_json j;
  j["path"] = path;
  if (std::isnan(node.threshold))
    j["threshold"] = nullptr;
  else
    j["threshold"] = node.threshold;
  j["size"] = node.vertices.size();
  j["vertices"] = node.vertices;
  j["decomposed"] = node.decomposed;
  j["ladder_exhausted"] = node.ladder_exhausted;
  if (node.decomposed) {
    j["child_threshold"] = node.child_threshold;
    j["dropped"] = node.dropped;
    j["unclustered"] = node.unclustered;
    j["articulation_min3"] = node.articulation_min3;
    j["articulation_retained"] = node.articulation_retained;
    j["stats_min3"] = stats_to_json(node.stats_min3);
    j["stats_retained"] = stats_to_json(node.stats_retained);
  }
  nlohmann::ordered_json children = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::string child_path =
        path.empty() ? std::to_string(i + 1) : path + "." + std::to_string(i + 1);
    children.push_back(node_to_json(node.children[i], child_path));
  }
  j["children"] = std::move(children);
  return j;
}

}  // namespace

std::string tree_to_json(const ClusterTree& tree) {
  nlohmann::ordered_json j;
  j["format"] = "scimap-tree/1";
  j["ladder"] = tree.ladder;
  j["min_size"] = tree.min_size;
  j["max_component_size"] = tree.max_component_size;
  j["journals"] = tree.labels;
  j["root"] = node_to_json(tree.root, "");
  return j.dump(2) + "\n";
}

std::vector<int> clu_from_tree(const ClusterTree& tree) {
  std::vector<int> partition(tree.labels.size(), 0);
  for (std::size_t i = 0; i < tree.root.children.size(); ++i) {
    for (VertexId v : tree.root.children[i].vertices) partition[v] = static_cast<int>(i + 1);
  }
  return partition;
}

}  // namespace scimap
