#include <vector>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "scimap/bicomponents.hpp"

using namespace scimap;

namespace {

SimilarityGraph butterfly() {
  // Two triangles joined at vertex 2.
  SimilarityGraph g({"a", "b", "c", "d", "e"});
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.finalize();
  return g;
}

}  // namespace

TEST_SUITE("bicomponents") {

TEST_CASE("butterfly splits at the waist") {
  auto d = bicomponents(butterfly());
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(d.components[1] == std::vector<VertexId>{2, 3, 4});
  CHECK(d.articulation_points == std::vector<VertexId>{2});
  CHECK(d.bigraph_pairs.empty());
  CHECK(d.isolates.empty());
}

TEST_CASE("path graph is all pairs") {
  SimilarityGraph g({"a", "b", "c", "d"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.finalize();
  auto d = bicomponents(g);
  CHECK(d.components.empty());
  REQUIRE(d.bigraph_pairs.size() == 3);
  CHECK(d.bigraph_pairs[0] == std::pair<VertexId, VertexId>{0, 1});
  CHECK(d.articulation_points == std::vector<VertexId>{1, 2});
}

TEST_CASE("cycle and clique are single components") {
  SimilarityGraph c5({"a", "b", "c", "d", "e"});
  for (VertexId v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  c5.finalize();
  auto d = bicomponents(c5);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].size() == 5);
  CHECK(d.articulation_points.empty());

  SimilarityGraph k4({"a", "b", "c", "d"});
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  k4.finalize();
  auto d4 = bicomponents(k4);
  REQUIRE(d4.components.size() == 1);
  CHECK(d4.components[0] == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("isolates and empty graphs") {
  SimilarityGraph g({"a", "b", "c"});
  g.add_edge(0, 1);
  g.finalize();
  auto d = bicomponents(g);
  CHECK(d.isolates == std::vector<VertexId>{2});
  REQUIRE(d.bigraph_pairs.size() == 1);

  SimilarityGraph empty;
  auto de = bicomponents(empty);
  CHECK(de.components.empty());
  CHECK(de.isolates.empty());
}

TEST_CASE("matches the brute-force oracle on random graphs") {
  std::uint64_t seed = 1;
  for (double p : {0.15, 0.35, 0.6}) {
    for (int rep = 0; rep < 40; ++rep, ++seed) {
      auto g = oracle::random_graph(3 + seed % 8, p, seed * 977);
      auto fast = bicomponents(g);
      auto slow = oracle::brute_bicomponents(g);
      REQUIRE_MESSAGE(fast == slow, "seed ", seed, " p ", p);
      CHECK(fast.articulation_points == oracle::brute_articulation(g));
      CHECK(articulation_oracle(g) == oracle::brute_articulation(g));
    }
  }
}

TEST_CASE("filter recomputes articulation over retained components") {
  // Triangle {0,1,2} and square {2,3,4,5} share 2; triangle {5,6,7} hangs off 5.
  SimilarityGraph g({"a", "b", "c", "d", "e", "f", "g", "h"});
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(2, 5);
  g.add_edge(5, 6);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  g.finalize();
  auto d = bicomponents(g);
  REQUIRE(d.components.size() == 3);
  CHECK(d.articulation_points == std::vector<VertexId>{2, 5});

  // Keeping only the square: both former cut vertices now touch one retained
  // component each, so neither is an articulation point any more.
  auto f = filter_components(d, 4);
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0] == std::vector<VertexId>{2, 3, 4, 5});
  CHECK(f.articulation_points.empty());
  CHECK(f.bigraph_pairs == d.bigraph_pairs);
  CHECK(f.isolates == d.isolates);

  auto keep_all = filter_components(d, 3);
  CHECK(keep_all.articulation_points == std::vector<VertexId>{2, 5});

  CHECK_THROWS_AS(filter_components(d, 2), InputError);
}

TEST_CASE("size distribution") {
  auto d = bicomponents(butterfly());
  auto s = size_distribution(d);
  CHECK(s.n_components == 2);
  CHECK(s.size_histogram.at(3) == 2);
  CHECK(s.n_articulation_points == 1);
  CHECK(s.n_journals_covered == 5);  // vertex 2 counted once
  CHECK(s.largest_size == 3);
}

}  // TEST_SUITE
