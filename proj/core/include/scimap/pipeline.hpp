#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scimap/decompose.hpp"
#include "scimap/similarity.hpp"
#include "scimap/types.hpp"

namespace scimap {

// Flat key=value run configuration; `#` starts a comment. Unknown keys are
// rejected. The raw text is copied into the run manifest verbatim.
struct PipelineConfig {
  std::string input;
  std::string outdir;
  Measure measure = Measure::pearson;
  DiagonalPolicy diagonal = DiagonalPolicy::include;
  std::vector<double> ladder{kDefaultLadder.begin(), kDefaultLadder.end()};
  std::size_t min_size = 3;
  std::size_t max_size = kDefaultMaxComponentSize;
  std::int64_t min_citing = 12;
  std::int64_t min_count = 1;
  bool drop_ones = false;  // shorthand for min_count 2
  bool transpose = false;
  std::uint64_t seed = 1;
  std::string layout = "auto";
  std::size_t layout_iters = 500;
  bool render = true;
  bool render_labels = false;
  std::string raw_text;
};

PipelineConfig parse_pipeline_config(const std::string& text);
PipelineConfig read_pipeline_config(const std::filesystem::path& path);

std::vector<double> parse_ladder(const std::string& text);

struct PipelineResult {
  std::filesystem::path outdir;
  std::vector<std::string> outputs;  // file names relative to outdir
  std::string manifest_json;
  ClusterTree tree;
  Classification classification;
};

// ingest -> count filter -> activity filter -> [transpose] -> similarity ->
// decompose -> classification + Pajek + per-cluster maps + manifest. Every
// file is written atomically; the manifest carries the counts of every stage.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace scimap
