#include "scimap/bicomponents.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace scimap {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

struct DfsFrame {
  VertexId vertex;
  VertexId parent;
  std::size_t next_neighbor;
};

void emit_block(std::vector<std::pair<VertexId, VertexId>>& edge_stack, std::size_t base,
                std::vector<std::size_t>& membership_count, std::vector<VertexId>& scratch,
                BicomponentDecomposition& out) {
  scratch.clear();
  for (std::size_t k = base; k < edge_stack.size(); ++k) {
    scratch.push_back(edge_stack[k].first);
    scratch.push_back(edge_stack[k].second);
  }
  edge_stack.resize(base);
  std::sort(scratch.begin(), scratch.end());
  scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
  for (VertexId v : scratch) ++membership_count[v];
  if (scratch.size() == 2) {
    out.bigraph_pairs.emplace_back(scratch[0], scratch[1]);
  } else {
    out.components.push_back(scratch);
  }
}

}  // namespace

BicomponentDecomposition bicomponents(const SimilarityGraph& g) {
  const std::size_t n = g.vertex_count();
  BicomponentDecomposition out;
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0), membership_count(n, 0);
  std::vector<DfsFrame> frames;
  std::vector<std::pair<VertexId, VertexId>> edge_stack;
  std::vector<VertexId> scratch;
  std::size_t timer = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    if (g.degree(root) == 0) {
      out.isolates.push_back(root);
      disc[root] = timer++;
      continue;
    }
    disc[root] = low[root] = timer++;
    frames.push_back({root, root, 0});
    while (!frames.empty()) {
      DfsFrame& f = frames.back();
      auto nb = g.neighbors(f.vertex);
      if (f.next_neighbor < nb.size()) {
        VertexId w = nb[f.next_neighbor++];
        if (w == f.parent) continue;  // simple graph: the parent edge appears once
        if (disc[w] == kUnvisited) {
          edge_stack.emplace_back(f.vertex, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.vertex, 0});
        } else if (disc[w] < disc[f.vertex]) {
          edge_stack.emplace_back(f.vertex, w);
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
      } else {
        VertexId child = f.vertex;
        VertexId parent = f.parent;
        frames.pop_back();
        if (frames.empty()) break;
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] >= disc[parent]) {
          // everything pushed at or after edge (parent, child) is one block
          std::size_t base = edge_stack.size();
          while (base > 0) {
            auto& e = edge_stack[base - 1];
            --base;
            if (e.first == parent && e.second == child) break;
          }
          emit_block(edge_stack, base, membership_count, scratch, out);
        }
      }
    }
  }

  for (VertexId v = 0; v < n; ++v)
    if (membership_count[v] >= 2) out.articulation_points.push_back(v);
  std::sort(out.components.begin(), out.components.end());
  std::sort(out.bigraph_pairs.begin(), out.bigraph_pairs.end());
  return out;
}

std::vector<VertexId> articulation_oracle(const SimilarityGraph& g) {
  const std::size_t n = g.vertex_count();
  auto count_components = [&](VertexId skip) {
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack;
    std::size_t count = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s] || s == skip) continue;
      ++count;
      stack.push_back(s);
      seen[s] = true;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
          if (w != skip && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    return count;
  };
  const VertexId no_skip = static_cast<VertexId>(n);
  std::size_t baseline = count_components(no_skip);
  std::vector<VertexId> points;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;  // removing an isolate only loses its own component
    if (count_components(v) > baseline) points.push_back(v);
  }
  return points;
}

BicomponentDecomposition filter_components(const BicomponentDecomposition& d, std::size_t min_size) {
  if (min_size < 3) throw InputError("min_size must be >= 3");
  BicomponentDecomposition out;
  out.bigraph_pairs = d.bigraph_pairs;
  out.isolates = d.isolates;
  VertexId max_vertex = 0;
  for (const auto& c : d.components) {
    if (c.size() >= min_size) {
      out.components.push_back(c);
      max_vertex = std::max(max_vertex, c.back());
    }
  }
  std::vector<std::size_t> membership_count(static_cast<std::size_t>(max_vertex) + 1, 0);
  for (const auto& c : out.components)
    for (VertexId v : c) ++membership_count[v];
  for (VertexId v = 0; v < membership_count.size(); ++v)
    if (membership_count[v] >= 2) out.articulation_points.push_back(v);
  return out;
}

ComponentStats size_distribution(const BicomponentDecomposition& d) {
  ComponentStats s;
  s.n_components = d.components.size();
  s.n_articulation_points = d.articulation_points.size();
  std::vector<VertexId> covered;
  for (const auto& c : d.components) {
    ++s.size_histogram[c.size()];
    s.largest_size = std::max(s.largest_size, c.size());
    covered.insert(covered.end(), c.begin(), c.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  s.n_journals_covered = covered.size();
  return s;
}

}  // namespace scimap
