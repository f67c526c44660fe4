#include <benchmark/benchmark.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scimap/graph.hpp"
#include "scimap/layout.hpp"
#include "scimap/rng.hpp"

namespace {

// Random tree plus shortcuts: connected, so both solvers accept it.
scimap::SimilarityGraph connected_graph(std::size_t n, std::uint64_t seed) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  scimap::SimilarityGraph g(std::move(labels));
  scimap::SplitMix64 rng(seed);
  std::set<std::pair<scimap::VertexId, scimap::VertexId>> used;
  for (scimap::VertexId i = 1; i < n; ++i) {
    auto anchor = static_cast<scimap::VertexId>(rng.next() % i);
    used.emplace(anchor, i);
    g.add_edge(anchor, i);
  }
  std::size_t extra = n / 2;
  while (extra > 0) {
    auto u = static_cast<scimap::VertexId>(rng.next() % n);
    auto v = static_cast<scimap::VertexId>(rng.next() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (used.emplace(u, v).second) {
      g.add_edge(u, v);
      --extra;
    }
  }
  g.finalize();
  return g;
}

void BM_kamada_kawai(benchmark::State& state) {
  auto g = connected_graph(static_cast<std::size_t>(state.range(0)), 3);
  scimap::LayoutParams p;
  p.max_iterations = 200;
  for (auto _ : state) {
    auto l = scimap::layout_kamada_kawai(g, p);
    benchmark::DoNotOptimize(l);
  }
}

void BM_fruchterman_reingold(benchmark::State& state) {
  auto g = connected_graph(static_cast<std::size_t>(state.range(0)), 3);
  scimap::LayoutParams p;
  p.max_iterations = 100;
  for (auto _ : state) {
    auto l = scimap::layout_fruchterman_reingold(g, p);
    benchmark::DoNotOptimize(l);
  }
}

}  // namespace

BENCHMARK(BM_kamada_kawai)->Arg(30)->Arg(80);
BENCHMARK(BM_fruchterman_reingold)->Arg(100)->Arg(1000)->Arg(4000);
