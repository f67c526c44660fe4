#include "oracles/oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>

#include "scimap/rng.hpp"

namespace scimap::oracle {

using boost::multiprecision::cpp_bin_float_100;
using boost::multiprecision::cpp_int;

ExactSimilarity exact_pearson(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size() || x.empty()) throw InputError("oracle: length mismatch");
  const cpp_int n = x.size();
  cpp_int sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += cpp_int(x[k]) * x[k];
    syy += cpp_int(y[k]) * y[k];
    sxy += cpp_int(x[k]) * y[k];
  }
  const cpp_int num = n * sxy - sx * sy;
  const cpp_int denx = n * sxx - sx * sx;
  const cpp_int deny = n * syy - sy * sy;
  if (denx == 0 || deny == 0) return {0.0, false};
  const cpp_bin_float_100 r =
      cpp_bin_float_100(num) / sqrt(cpp_bin_float_100(denx) * cpp_bin_float_100(deny));
  return {std::clamp(r.convert_to<double>(), -1.0, 1.0), true};
}

ExactSimilarity exact_cosine(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size() || x.empty()) throw InputError("oracle: length mismatch");
  cpp_int sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += cpp_int(x[k]) * x[k];
    syy += cpp_int(y[k]) * y[k];
    sxy += cpp_int(x[k]) * y[k];
  }
  if (sxx == 0 || syy == 0) return {0.0, true};
  const cpp_bin_float_100 r =
      cpp_bin_float_100(sxy) / sqrt(cpp_bin_float_100(sxx) * cpp_bin_float_100(syy));
  return {std::clamp(r.convert_to<double>(), -1.0, 1.0), true};
}

std::vector<std::int64_t> dense_row(const CitationMatrix& m, VertexId i,
                                    std::span<const VertexId> skip) {
  std::vector<std::int64_t> full(m.journal_count(), 0);
  for (const auto& e : m.row(i)) full[e.cited] = e.count;
  std::vector<std::int64_t> out;
  out.reserve(full.size());
  for (std::size_t c = 0; c < full.size(); ++c) {
    if (!std::binary_search(skip.begin(), skip.end(), static_cast<VertexId>(c)))
      out.push_back(full[c]);
  }
  return out;
}

namespace {

// Connected component count among `alive` vertices only.
std::size_t component_count(const SimilarityGraph& g, const std::vector<bool>& alive) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (alive[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool connected_avoiding(const SimilarityGraph& g, VertexId from, VertexId to, VertexId banned) {
  if (from == to) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  seen[banned] = true;
  seen[from] = true;
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      if (w == to) return true;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return false;
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

BicomponentDecomposition brute_bicomponents(const SimilarityGraph& g) {
  const auto& edges = g.edges();
  Dsu dsu(edges.size());

  // Index incident edges per vertex.
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = incident[v];
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const Edge& ea = edges[inc[a]];
        const Edge& eb = edges[inc[b]];
        VertexId far_a = ea.u == v ? ea.v : ea.u;
        VertexId far_b = eb.u == v ? eb.v : eb.u;
        if (connected_avoiding(g, far_a, far_b, v)) dsu.merge(inc[a], inc[b]);
      }
    }
  }

  // Gather vertex sets per edge class.
  std::vector<std::vector<VertexId>> classes(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& c = classes[dsu.find(e)];
    c.push_back(edges[e].u);
    c.push_back(edges[e].v);
  }

  BicomponentDecomposition d;
  std::vector<std::size_t> block_count(g.vertex_count(), 0);
  for (auto& c : classes) {
    if (c.empty()) continue;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (VertexId v : c) ++block_count[v];
    if (c.size() >= 3) {
      d.components.push_back(std::move(c));
    } else {
      d.bigraph_pairs.emplace_back(c[0], c[1]);
    }
  }
  std::sort(d.components.begin(), d.components.end());
  std::sort(d.bigraph_pairs.begin(), d.bigraph_pairs.end());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (block_count[v] >= 2) d.articulation_points.push_back(v);
    if (g.degree(v) == 0) d.isolates.push_back(v);
  }
  return d;
}

std::vector<VertexId> brute_articulation(const SimilarityGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n);
  for (VertexId v = 0; v < n; ++v) alive[v] = g.degree(v) > 0;
  const std::size_t baseline = component_count(g, alive);

  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    alive[v] = false;
    // Neighbors stranded by the removal count as components of their own,
    // which is exactly what "increases the number of components" asks for.
    if (component_count(g, alive) > baseline) out.push_back(v);
    alive[v] = true;
  }
  return out;
}

SimilarityGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  SimilarityGraph g(std::move(labels));
  SplitMix64 rng(seed);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (rng.next_double() < p) g.add_edge(i, j, 1.0);
    }
  }
  g.finalize();
  return g;
}

SimilarityGraph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  SimilarityGraph g(std::move(labels));
  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> picked;
  for (VertexId i = 1; i < n; ++i) {
    auto anchor = static_cast<VertexId>(rng.next() % i);
    picked.emplace_back(anchor, i);
  }
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (std::find(picked.begin(), picked.end(), std::make_pair(i, j)) != picked.end()) continue;
      if (rng.next_double() < p) picked.emplace_back(i, j);
    }
  }
  for (auto [u, v] : picked) g.add_edge(u, v, 1.0);
  g.finalize();
  return g;
}

SimilarityMatrix random_similarity(std::size_t n, std::uint64_t seed, double undefined_p) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  SimilarityMatrix s(std::move(labels), Measure::pearson);
  SplitMix64 rng(seed);
  for (VertexId i = 0; i < n; ++i) {
    s.set(i, i, 1.0, true);
    for (VertexId j = i + 1; j < n; ++j) {
      if (undefined_p > 0 && rng.next_double() < undefined_p) {
        s.set(i, j, 0.0, false);
      } else {
        s.set(i, j, rng.next_double(-1.0, 1.0), true);
      }
    }
  }
  return s;
}

CitationMatrix random_citation_matrix(std::size_t n, double p, std::uint64_t seed,
                                      std::int64_t max_count, std::size_t zero_row) {
  CitationMatrix m;
  for (std::size_t i = 0; i < n; ++i) m.add_journal("j" + std::to_string(i + 1));
  SplitMix64 rng(seed);
  for (VertexId i = 0; i < n; ++i) {
    if (i == zero_row) continue;
    for (VertexId j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.next_double() < p) {
        auto count = static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(max_count)) + 1;
        m.add_entry(i, j, count);
      }
    }
  }
  m.finalize();
  return m;
}

}  // namespace scimap::oracle
