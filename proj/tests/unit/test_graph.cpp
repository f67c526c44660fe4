#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "scimap/graph.hpp"

using namespace scimap;

TEST_SUITE("graph") {

TEST_CASE("edges are normalised and sorted") {
  SimilarityGraph g({"a", "b", "c", "d"});
  g.add_edge(2, 0, 0.5);
  g.add_edge(3, 1, 0.9);
  g.add_edge(0, 1, 0.7);
  g.finalize();
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1, 0.7});
  CHECK(g.edges()[1] == Edge{0, 2, 0.5});
  CHECK(g.edges()[2] == Edge{1, 3, 0.9});
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(2, 3));
  CHECK(g.edge_weight(1, 3) == 0.9);
  CHECK(g.edge_weight(0, 3) == 0.0);
  CHECK(g.degree(0) == 2);
  auto nb = g.neighbors(0);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0] == 1);
  CHECK(nb[1] == 2);
}

TEST_CASE("edge validation") {
  // Malformed edges come from caller code, not user input.
  SimilarityGraph g({"a", "b"});
  CHECK_THROWS_AS(g.add_edge(0, 0), std::logic_error);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::logic_error);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK_THROWS_AS(g.finalize(), std::logic_error);  // same edge twice
}

TEST_CASE("threshold graph keeps ties and skips undefined pairs") {
  SimilarityMatrix s({"a", "b", "c"}, Measure::pearson);
  s.set(0, 0, 1.0, true);
  s.set(1, 1, 1.0, true);
  s.set(2, 2, 1.0, true);
  s.set(0, 1, 0.8, true);   // exactly at the cutoff: kept
  s.set(0, 2, 0.95, false);  // undefined: never an edge
  s.set(1, 2, 0.79, true);
  auto g = threshold_graph(s, 0.8);
  CHECK(g.threshold() == 0.8);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0] == Edge{0, 1, 0.8});
}

TEST_CASE("citation graph takes the larger direction") {
  CitationMatrix m;
  m.add_journal("a");
  m.add_journal("b");
  m.add_journal("c");
  m.add_entry(0, 1, 3);
  m.add_entry(1, 0, 7);  // both directions: weight 7
  m.add_entry(2, 0, 2);  // one direction only
  m.add_entry(1, 1, 9);  // self citation: ignored
  m.finalize();
  auto g = citation_graph(m);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge_weight(0, 1) == 7.0);
  CHECK(g.edge_weight(0, 2) == 2.0);
  auto g5 = citation_graph(m, 5);
  REQUIRE(g5.edge_count() == 1);
  CHECK(g5.edge_weight(0, 1) == 7.0);
}

TEST_CASE("degree summary") {
  auto g = oracle::random_graph(12, 0.3, 5);
  auto d = degree_summary(g);
  REQUIRE(d.degrees.size() == 12);
  std::size_t connected = 0, maxd = 0;
  for (VertexId v = 0; v < 12; ++v) {
    CHECK(d.degrees[v] == g.degree(v));
    if (d.degrees[v] > 0) ++connected;
    maxd = std::max(maxd, d.degrees[v]);
  }
  CHECK(d.connected_count == connected);
  CHECK(d.max_degree == maxd);
}

TEST_CASE("induced subgraph remaps and keeps labels") {
  SimilarityGraph g({"a", "b", "c", "d", "e"});
  g.add_edge(0, 1, 0.5);
  g.add_edge(1, 3, 0.6);
  g.add_edge(3, 4, 0.7);
  g.finalize();
  std::vector<VertexId> keep{1, 3, 4};
  auto sub = extract_subgraph(g, keep);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.labels() == std::vector<std::string>{"b", "d", "e"});
  REQUIRE(sub.edge_count() == 2);
  CHECK(sub.edge_weight(0, 1) == 0.6);
  CHECK(sub.edge_weight(1, 2) == 0.7);
  std::vector<VertexId> bad{1, 9};
  CHECK_THROWS_AS(extract_subgraph(g, bad), InputError);
}

TEST_CASE("connected components are sorted by smallest member") {
  SimilarityGraph g({"a", "b", "c", "d", "e", "f"});
  g.add_edge(4, 5);
  g.add_edge(0, 2);
  g.finalize();
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<VertexId>{0, 2});
  CHECK(comps[1] == std::vector<VertexId>{1});
  CHECK(comps[2] == std::vector<VertexId>{3});
  CHECK(comps[3] == std::vector<VertexId>{4, 5});
}

}  // TEST_SUITE
