#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "scimap/bicomponents.hpp"
#include "scimap/serialize.hpp"
#include "scimap/similarity.hpp"

using namespace scimap;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("scimap_ser_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("matrix round-trip keeps entry-less journals") {
  TempDir tmp;
  CitationMatrix m;
  m.add_journal("a");
  m.add_journal("quiet");  // no entries at all
  m.add_journal("b");
  m.add_entry(0, 2, 7);
  m.finalize();
  auto p = tmp.path / "m.bin";
  write_matrix_file(p, m);
  CHECK(read_matrix_file(p) == m);
  CHECK(sniff_magic(p) == "SCMMTX01");
}

TEST_CASE("similarity round-trip keeps undefined flags") {
  TempDir tmp;
  auto m = oracle::random_citation_matrix(8, 0.4, 5, 50, 3);  // row 3 left empty
  auto s = pearson_similarity(m);
  auto p = tmp.path / "s.bin";
  write_similarity_file(p, s);
  auto back = read_similarity_file(p);
  CHECK(back.labels() == s.labels());
  CHECK(back.measure() == s.measure());
  REQUIRE(back.pair_count() == s.pair_count());
  bool any_undefined = false;
  for (VertexId i = 0; i < 8; ++i) {
    for (VertexId j = i; j < 8; ++j) {
      CHECK(back.defined(i, j) == s.defined(i, j));
      if (!s.defined(i, j)) any_undefined = true;
      CHECK(back.value(i, j) == s.value(i, j));  // bitwise
    }
  }
  CHECK(any_undefined);
}

TEST_CASE("graph and decomposition round-trips") {
  TempDir tmp;
  auto g = oracle::random_graph(12, 0.3, 17);
  auto gp = tmp.path / "g.bin";
  write_graph_file(gp, g);
  CHECK(read_graph_file(gp) == g);
  CHECK(sniff_magic(gp) == "SCMGRF01");

  LabeledDecomposition d{g.labels(), bicomponents(g)};
  auto dp = tmp.path / "d.bin";
  write_decomposition_file(dp, d);
  CHECK(read_decomposition_file(dp) == d);
  CHECK(sniff_magic(dp) == "SCMDCP01");
}

TEST_CASE("wrong magic and truncation are input errors") {
  TempDir tmp;
  auto g = oracle::random_graph(5, 0.5, 1);
  auto p = tmp.path / "g.bin";
  write_graph_file(p, g);

  CHECK_THROWS_WITH_AS(read_matrix_file(p), doctest::Contains("not a"), InputError);

  auto full = read_file(p);
  write_file_atomic(tmp.path / "cut.bin", full.substr(0, full.size() / 2));
  CHECK_THROWS_WITH_AS(read_graph_file(tmp.path / "cut.bin"), doctest::Contains("truncated"),
                       InputError);

  write_file_atomic(tmp.path / "long.bin", full + "xx");
  CHECK_THROWS_WITH_AS(read_graph_file(tmp.path / "long.bin"), doctest::Contains("trailing"),
                       InputError);

  CHECK_THROWS_AS(read_file(tmp.path / "absent.bin"), InputError);
  CHECK(sniff_magic(tmp.path / "absent.bin") == "");
}

TEST_CASE("atomic writes leave no temporaries behind") {
  TempDir tmp;
  write_file_atomic(tmp.path / "out.txt", "payload");
  CHECK(read_file(tmp.path / "out.txt") == "payload");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) ++files;
  CHECK(files == 1);
  // Overwrite works too.
  write_file_atomic(tmp.path / "out.txt", "changed");
  CHECK(read_file(tmp.path / "out.txt") == "changed");
}

}  // TEST_SUITE
