#include <benchmark/benchmark.h>

#include "scimap/similarity.hpp"
#include "scimap/synthetic.hpp"

namespace {

scimap::CitationMatrix planted(std::size_t block, std::size_t blocks) {
  scimap::SyntheticSpec spec;
  spec.blocks.assign(blocks, block);
  spec.bridge_journals = blocks >= 2 ? blocks - 1 : 0;
  spec.seed = 11;
  return scimap::generate_synthetic(spec);
}

void BM_pearson(benchmark::State& state) {
  auto m = planted(static_cast<std::size_t>(state.range(0)), 4);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto s = scimap::pearson_similarity(m, scimap::DiagonalPolicy::include, threads);
    benchmark::DoNotOptimize(s);
  }
  state.counters["journals"] = static_cast<double>(m.journal_count());
}

void BM_cosine(benchmark::State& state) {
  auto m = planted(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    auto s = scimap::cosine_similarity(m);
    benchmark::DoNotOptimize(s);
  }
}

}  // namespace

BENCHMARK(BM_pearson)->ArgsProduct({{25, 50, 100}, {1, 4}});
BENCHMARK(BM_cosine)->Arg(50);
