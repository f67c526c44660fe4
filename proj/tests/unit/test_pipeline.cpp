#include <unistd.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "doctest.h"
#include "scimap/pajek.hpp"
#include "scimap/pipeline.hpp"
#include "scimap/serialize.hpp"
#include "scimap/synthetic.hpp"

using namespace scimap;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("scimap_pipe_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("config parsing") {
  auto c = parse_pipeline_config(
      "# a comment\n"
      "input = m.bin\n"
      "outdir = out\n"
      "measure = cosine\n"
      "diagonal = exclude_pair\n"
      "ladder = 0.7, 0.85\n"
      "min_size = 5\n"
      "max_size = 100\n"
      "min_citing = 0\n"
      "min_count = 2\n"
      "drop_ones = true\n"
      "transpose = true\n"
      "seed = 9\n"
      "layout = fr\n"
      "layout_iters = 50\n"
      "render = false\n"
      "render_labels = true\n");
  CHECK(c.input == "m.bin");
  CHECK(c.outdir == "out");
  CHECK(c.measure == Measure::cosine);
  CHECK(c.diagonal == DiagonalPolicy::exclude_pair);
  CHECK(c.ladder == std::vector<double>{0.7, 0.85});
  CHECK(c.min_size == 5);
  CHECK(c.max_size == 100);
  CHECK(c.min_citing == 0);
  CHECK(c.min_count == 2);
  CHECK(c.drop_ones);
  CHECK(c.transpose);
  CHECK(c.seed == 9);
  CHECK(c.layout == "fr");
  CHECK(c.layout_iters == 50);
  CHECK(!c.render);
  CHECK(c.render_labels);
  CHECK(c.raw_text.find("# a comment") != std::string::npos);
}

TEST_CASE("config validation") {
  CHECK_THROWS_WITH_AS(parse_pipeline_config("outdir = o\n"), doctest::Contains("input"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_pipeline_config("input = i\n"), doctest::Contains("outdir"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_pipeline_config("input = i\noutdir = o\nwhat = 1\n"),
                       doctest::Contains("line 3"), InputError);
  CHECK_THROWS_AS(parse_pipeline_config("input = i\noutdir = o\nseed = x\n"), InputError);
  CHECK_THROWS_AS(parse_pipeline_config("input = i\noutdir = o\nrender = maybe\n"), InputError);
  CHECK_THROWS_AS(parse_ladder(""), InputError);
  CHECK_THROWS_AS(parse_ladder("0.8,,0.9"), InputError);
  CHECK_THROWS_AS(parse_ladder("0.8,x"), InputError);
  CHECK(parse_ladder("0.8, 0.9") == std::vector<double>{0.8, 0.9});
}

TEST_CASE("full run produces the documented artifacts") {
  TempDir tmp;
  SyntheticSpec spec;
  spec.blocks = {8, 8};
  spec.bridge_journals = 1;
  spec.seed = 5;
  write_matrix_file(tmp.path / "m.bin", generate_synthetic(spec));

  PipelineConfig c;
  c.input = (tmp.path / "m.bin").string();
  c.outdir = (tmp.path / "out").string();
  c.ladder = {0.8};
  c.min_size = 5;
  c.min_citing = 0;
  c.layout_iters = 60;
  auto r = run_pipeline(c);

  for (const char* name : {"classification.csv", "clusters.net", "clusters.clu", "tree.json",
                           "manifest.json", "maps/cluster_1.svg", "maps/cluster_2.svg"}) {
    CAPTURE(name);
    CHECK(fs::exists(r.outdir / name));
    CHECK(std::find(r.outputs.begin(), r.outputs.end(), name) != r.outputs.end());
  }

  auto man = nlohmann::json::parse(r.manifest_json);
  CHECK(man["format"] == "scimap-manifest/1");
  const std::size_t total = 8 + 8 + 1 + kSyntheticBackgroundJournals;
  CHECK(man["stages"]["ingest"]["journals"] == total);
  CHECK(!man["stages"].contains("activity_filter"));  // min_citing 0 skips the stage
  CHECK(!man["stages"].contains("count_filter"));     // min_count 1 is a no-op
  REQUIRE(man["stages"]["levels"].size() == 1);
  CHECK(man["stages"]["levels"][0]["threshold"] == 0.8);
  CHECK(man["stages"]["levels"][0]["retained"]["components"] == 2);
  CHECK(man["stages"]["clusters"]["count"] == 2);
  CHECK(man["stages"]["clusters"]["sizes"] == std::vector<std::size_t>{9, 8});
  CHECK(man["config"]["ladder"] == std::vector<double>{0.8});
  CHECK(man["config"]["min_size"] == 5);

  REQUIRE(r.tree.root.children.size() == 2);
  CHECK(r.tree.root.children[0].vertices.size() == 9);
  CHECK(r.classification.rows.size() == 17);

  // The partition file covers every journal, clusters numbered from 1.
  auto clu = read_pajek_clu(read_file(r.outdir / "clusters.clu"));
  CHECK(clu.size() == total);
}

TEST_CASE("render can be switched off") {
  TempDir tmp;
  SyntheticSpec spec;
  spec.blocks = {4, 4};
  write_matrix_file(tmp.path / "m.bin", generate_synthetic(spec));
  PipelineConfig c;
  c.input = (tmp.path / "m.bin").string();
  c.outdir = (tmp.path / "out").string();
  c.ladder = {0.8};
  c.min_citing = 0;
  c.render = false;
  auto r = run_pipeline(c);
  CHECK(!fs::exists(r.outdir / "maps"));
  CHECK(fs::exists(r.outdir / "manifest.json"));
}

TEST_CASE("missing input surfaces with the stage name") {
  TempDir tmp;
  PipelineConfig c;
  c.input = (tmp.path / "nope.bin").string();
  c.outdir = (tmp.path / "out").string();
  CHECK_THROWS_WITH_AS(run_pipeline(c), doctest::Contains("ingest"), InputError);
}

}  // TEST_SUITE
