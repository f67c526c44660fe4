#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "scimap/bicomponents.hpp"
#include "scimap/graph.hpp"
#include "scimap/rng.hpp"

namespace {

scimap::SimilarityGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  scimap::SimilarityGraph g(std::move(labels));
  scimap::SplitMix64 rng(seed);
  for (scimap::VertexId i = 0; i < n; ++i)
    for (scimap::VertexId j = i + 1; j < n; ++j)
      if (rng.next_double() < p) g.add_edge(i, j);
  g.finalize();
  return g;
}

void BM_bicomponents(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = random_graph(n, 8.0 / static_cast<double>(n), 42);
  for (auto _ : state) {
    auto d = scimap::bicomponents(g);
    benchmark::DoNotOptimize(d);
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}

void BM_filter_components(benchmark::State& state) {
  auto g = random_graph(2000, 0.004, 7);
  auto d = scimap::bicomponents(g);
  for (auto _ : state) {
    auto f = scimap::filter_components(d, 10);
    benchmark::DoNotOptimize(f);
  }
}

}  // namespace

BENCHMARK(BM_bicomponents)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK(BM_filter_components);
