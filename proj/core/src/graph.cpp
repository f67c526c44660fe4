#include "scimap/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace scimap {

SimilarityGraph::SimilarityGraph(std::vector<std::string> labels, double threshold)
    : labels_(std::move(labels)), threshold_(threshold) {}

void SimilarityGraph::add_edge(VertexId u, VertexId v, double weight) {
  if (u == v) throw std::logic_error("self loop not allowed");
  if (u >= labels_.size() || v >= labels_.size()) throw std::logic_error("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, weight});
  finalized_ = false;
}

void SimilarityGraph::finalize() {
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw std::logic_error("duplicate edge");
  }
  const std::size_t n = labels_.size();
  offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.assign(offsets_[n], 0);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  finalized_ = true;
}

std::span<const VertexId> SimilarityGraph::neighbors(VertexId v) const {
  if (!finalized_) throw std::logic_error("graph not finalized");
  if (v >= labels_.size()) throw std::logic_error("vertex out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool SimilarityGraph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double SimilarityGraph::edge_weight(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->weight;
  return 0.0;
}

bool SimilarityGraph::operator==(const SimilarityGraph& other) const {
  return labels_ == other.labels_ && threshold_ == other.threshold_ && edges_ == other.edges_;
}

SimilarityGraph threshold_graph(const SimilarityMatrix& sim, double r_min) {
  SimilarityGraph g(sim.labels(), r_min);
  const std::size_t n = sim.size();
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (sim.defined(i, j) && sim.value(i, j) >= r_min) g.add_edge(i, j, sim.value(i, j));
    }
  }
  g.finalize();
  return g;
}

SimilarityGraph citation_graph(const CitationMatrix& m, long long min_count) {
  if (min_count < 1) throw InputError("min_count must be >= 1");
  SimilarityGraph g(m.labels(), 0.0);
  const std::size_t n = m.journal_count();
  for (VertexId i = 0; i < n; ++i) {
    for (const auto& e : m.row(i)) {
      if (e.cited == i) continue;  // self citation
      VertexId a = std::min(i, e.cited);
      VertexId b = std::max(i, e.cited);
      // handle each unordered pair once: from the citing side that stores it
      // first, i.e. from a unless only (b, a) exists
      if (i == b && m.at(a, b) != 0) continue;
      long long w = std::max(m.at(a, b), m.at(b, a));
      if (w >= min_count) g.add_edge(a, b, static_cast<double>(w));
    }
  }
  g.finalize();
  return g;
}

DegreeSummary degree_summary(const SimilarityGraph& g) {
  DegreeSummary s;
  const std::size_t n = g.vertex_count();
  s.degrees.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t d = g.degree(v);
    s.degrees[v] = d;
    if (d >= 1) ++s.connected_count;
    s.max_degree = std::max(s.max_degree, d);
  }
  return s;
}

SimilarityGraph extract_subgraph(const SimilarityGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (VertexId v : sorted) {
    if (v >= g.vertex_count()) throw InputError("subgraph vertex out of range");
    labels.push_back(g.label(v));
  }
  SimilarityGraph sub(std::move(labels), g.threshold());
  std::vector<VertexId> remap(g.vertex_count(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < sorted.size(); ++i) remap[sorted[i]] = static_cast<VertexId>(i);
  for (const auto& e : g.edges()) {
    if (remap[e.u] != static_cast<VertexId>(-1) && remap[e.v] != static_cast<VertexId>(-1))
      sub.add_edge(remap[e.u], remap[e.v], e.weight);
  }
  sub.finalize();
  return sub;
}

std::vector<std::vector<VertexId>> connected_components(const SimilarityGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace scimap
