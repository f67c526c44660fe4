#include "scimap/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "scimap/bicomponents.hpp"
#include "scimap/citation_matrix.hpp"
#include "scimap/csv_io.hpp"
#include "scimap/format.hpp"
#include "scimap/graph.hpp"
#include "scimap/layout.hpp"
#include "scimap/pajek.hpp"
#include "scimap/serialize.hpp"
#include "scimap/svg.hpp"

namespace scimap {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw InputError("line " + std::to_string(line) + ": expected true or false, got " +
                   std::string(v));
}

template <typename T>
T parse_int(std::string_view v, std::size_t line) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size())
    throw InputError("line " + std::to_string(line) + ": not an integer: " + std::string(v));
  return out;
}

}  // namespace

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> ladder;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok(strip(std::string_view(text).substr(pos, comma - pos)));
    if (tok.empty()) throw InputError("empty ladder entry");
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) throw InputError("bad ladder value: " + tok);
    ladder.push_back(v);
    pos = comma + 1;
  }
  return ladder;
}

PipelineConfig parse_pipeline_config(const std::string& text) {
  PipelineConfig cfg;
  cfg.raw_text = text;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line = strip(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InputError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key(strip(line.substr(0, eq)));
    std::string value(strip(line.substr(eq + 1)));
    if (key == "input") {
      cfg.input = value;
    } else if (key == "outdir") {
      cfg.outdir = value;
    } else if (key == "measure") {
      cfg.measure = measure_from_string(value);
    } else if (key == "diagonal") {
      if (value == "include")
        cfg.diagonal = DiagonalPolicy::include;
      else if (value == "exclude_pair")
        cfg.diagonal = DiagonalPolicy::exclude_pair;
      else
        throw InputError("line " + std::to_string(line_no) + ": unknown diagonal policy: " + value);
    } else if (key == "ladder") {
      cfg.ladder = parse_ladder(value);
    } else if (key == "min_size") {
      cfg.min_size = parse_int<std::size_t>(value, line_no);
    } else if (key == "max_size") {
      cfg.max_size = parse_int<std::size_t>(value, line_no);
    } else if (key == "min_citing") {
      cfg.min_citing = parse_int<std::int64_t>(value, line_no);
    } else if (key == "min_count") {
      cfg.min_count = parse_int<std::int64_t>(value, line_no);
    } else if (key == "drop_ones") {
      cfg.drop_ones = parse_bool(value, line_no);
    } else if (key == "transpose") {
      cfg.transpose = parse_bool(value, line_no);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(value, line_no);
    } else if (key == "layout") {
      if (value != "kk" && value != "fr" && value != "auto")
        throw InputError("line " + std::to_string(line_no) + ": unknown layout: " + value);
      cfg.layout = value;
    } else if (key == "layout_iters") {
      cfg.layout_iters = parse_int<std::size_t>(value, line_no);
    } else if (key == "render") {
      cfg.render = parse_bool(value, line_no);
    } else if (key == "render_labels") {
      cfg.render_labels = parse_bool(value, line_no);
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown key: " + key);
    }
  }
  if (cfg.input.empty()) throw InputError("config is missing `input`");
  if (cfg.outdir.empty()) throw InputError("config is missing `outdir`");
  return cfg;
}

PipelineConfig read_pipeline_config(const std::filesystem::path& path) {
  return parse_pipeline_config(read_file(path));
}

namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError("stage " + std::string(name) + ": " + e.what());
  }
}

nlohmann::ordered_json stats_json(const ComponentStats& s) {
  return {{"components", s.n_components},
          {"journals", s.n_journals_covered},
          {"articulation_points", s.n_articulation_points},
          {"largest", s.largest_size}};
}

struct LevelAccumulator {
  std::size_t nodes_split = 0;
  std::size_t dropped = 0;
  std::size_t unclustered = 0;
  ComponentStats min3;
  ComponentStats retained;
};

void accumulate_levels(const ClusterNode& node, const std::vector<double>& ladder,
                       std::vector<LevelAccumulator>& acc) {
  if (node.decomposed) {
    for (std::size_t k = 0; k < ladder.size(); ++k) {
      if (ladder[k] != node.child_threshold) continue;
      auto& a = acc[k];
      ++a.nodes_split;
      a.dropped += node.dropped.size();
      a.unclustered += node.unclustered.size();
      auto add = [](ComponentStats& into, const ComponentStats& from) {
        into.n_components += from.n_components;
        into.n_articulation_points += from.n_articulation_points;
        into.n_journals_covered += from.n_journals_covered;
        into.largest_size = std::max(into.largest_size, from.largest_size);
        for (const auto& [size, count] : from.size_histogram) into.size_histogram[size] += count;
      };
      add(a.min3, node.stats_min3);
      add(a.retained, node.stats_retained);
    }
  }
  for (const auto& child : node.children) accumulate_levels(child, ladder, acc);
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult result;
  result.outdir = config.outdir;
  std::filesystem::create_directories(result.outdir);

  nlohmann::ordered_json manifest;
  manifest["format"] = "scimap-manifest/1";
  manifest["config"] = {{"input", config.input},
                        {"outdir", config.outdir},
                        {"measure", std::string(to_string(config.measure))},
                        {"diagonal", config.diagonal == DiagonalPolicy::include ? "include"
                                                                                : "exclude_pair"},
                        {"ladder", config.ladder},
                        {"min_size", config.min_size},
                        {"max_size", config.max_size},
                        {"min_citing", config.min_citing},
                        {"min_count", config.min_count},
                        {"drop_ones", config.drop_ones},
                        {"transpose", config.transpose},
                        {"seed", config.seed},
                        {"layout", config.layout},
                        {"layout_iters", config.layout_iters},
                        {"render", config.render},
                        {"render_labels", config.render_labels},
                        {"text", config.raw_text}};

  CitationMatrix matrix = stage("ingest", [&] {
    if (sniff_magic(config.input) == kMatrixMagic) return read_matrix_file(config.input);
    return read_citation_file(config.input);
  });
  manifest["stages"]["ingest"] = {{"input", config.input},
                                  {"journals", matrix.journal_count()},
                                  {"entries", matrix.entry_count()}};

  const std::int64_t effective_min_count =
      std::max<std::int64_t>(config.min_count, config.drop_ones ? 2 : 1);
  if (effective_min_count > 1) {
    const std::size_t before = matrix.entry_count();
    matrix = stage("count_filter",
                   [&] { return apply_citation_threshold(matrix, effective_min_count); });
    manifest["stages"]["count_filter"] = {{"min_count", effective_min_count},
                                          {"entries_before", before},
                                          {"entries", matrix.entry_count()},
                                          {"entries_removed", before - matrix.entry_count()}};
  }

  if (config.min_citing > 0) {
    const std::size_t before = matrix.journal_count();
    LowActivityFilter filtered =
        stage("activity_filter", [&] { return filter_low_activity(matrix, config.min_citing); });
    std::vector<std::string> excluded_labels;
    excluded_labels.reserve(filtered.excluded.size());
    for (const auto& j : filtered.excluded) excluded_labels.push_back(j.label);
    manifest["stages"]["activity_filter"] = {{"min_citing", config.min_citing},
                                             {"journals_before", before},
                                             {"excluded", filtered.excluded.size()},
                                             {"retained", filtered.matrix.journal_count()},
                                             {"excluded_labels", excluded_labels}};
    matrix = std::move(filtered.matrix);
  }

  if (config.transpose) {
    matrix = stage("transpose", [&] { return transpose(matrix); });
  }
  manifest["stages"]["transpose"] = {{"applied", config.transpose}};

  {
    SimilarityGraph raw = stage("raw_network", [&] { return citation_graph(matrix, 1); });
    auto comps = connected_components(raw);
    std::size_t isolates = 0, pairs = 0, largest = 0;
    for (const auto& c : comps) {
      if (c.size() == 1) ++isolates;
      if (c.size() == 2) ++pairs;
      largest = std::max(largest, c.size());
    }
    manifest["stages"]["raw_network"] = {{"journals", raw.vertex_count()},
                                         {"edges", raw.edge_count()},
                                         {"components", comps.size()},
                                         {"isolates", isolates},
                                         {"bigraph_pairs", pairs},
                                         {"largest_component", largest},
                                         {"connected_journals", raw.vertex_count() - isolates}};
  }

  SimilarityMatrix sim = stage("similarity", [&] {
    return config.measure == Measure::pearson ? pearson_similarity(matrix, config.diagonal)
                                              : cosine_similarity(matrix, config.diagonal);
  });
  {
    const std::size_t n = sim.size();
    std::size_t defined = 0;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j)
        if (sim.defined(i, j)) ++defined;
    const std::size_t pairs = n * (n - 1) / 2;
    manifest["stages"]["similarity"] = {{"measure", std::string(to_string(sim.measure()))},
                                        {"journals", n},
                                        {"pairs", pairs},
                                        {"defined", defined},
                                        {"undefined", pairs - defined}};
  }

  result.tree = stage("decompose", [&] {
    return decompose(sim, config.ladder, config.min_size, config.max_size);
  });
  result.classification = classify(result.tree);

  std::vector<LevelAccumulator> acc(config.ladder.size());
  accumulate_levels(result.tree.root, config.ladder, acc);
  auto levels = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < config.ladder.size(); ++k) {
    levels.push_back({{"threshold", config.ladder[k]},
                      {"nodes_split", acc[k].nodes_split},
                      {"dropped", acc[k].dropped},
                      {"unclustered", acc[k].unclustered},
                      {"min3", stats_json(acc[k].min3)},
                      {"retained", stats_json(acc[k].retained)}});
  }
  manifest["stages"]["levels"] = std::move(levels);

  {
    auto sizes = nlohmann::ordered_json::array();
    std::size_t assigned = 0;
    for (const auto& child : result.tree.root.children) {
      sizes.push_back(child.vertices.size());
      assigned += child.vertices.size();
    }
    manifest["stages"]["clusters"] = {{"count", result.tree.root.children.size()},
                                      {"sizes", std::move(sizes)},
                                      {"assigned", assigned},
                                      {"unassigned", sim.size() - assigned}};
  }

  auto emit = [&](const std::string& name, const std::string& content) {
    write_file_atomic(result.outdir / name, content);
    result.outputs.push_back(name);
  };

  emit("classification.csv", classification_csv(result.classification));
  SimilarityGraph base_graph = threshold_graph(sim, config.ladder.front());
  emit("clusters.net", write_pajek_net(pajek_from_graph(base_graph)));
  emit("clusters.clu", write_pajek_clu(clu_from_tree(result.tree)));
  emit("tree.json", tree_to_json(result.tree));

  if (config.render && !result.tree.root.children.empty()) {
    std::filesystem::create_directories(result.outdir / "maps");
    const auto& articulation = result.tree.root.articulation_retained;
    for (std::size_t k = 0; k < result.tree.root.children.size(); ++k) {
      const auto& child = result.tree.root.children[k];
      SimilarityGraph sub = extract_subgraph(base_graph, child.vertices);
      LayoutParams params;
      params.seed = config.seed;
      params.max_iterations = config.layout_iters;
      Layout l = layout_graph(sub, params, config.layout);
      std::vector<int> partition(child.vertices.size(), 0);
      for (std::size_t c = 0; c < child.children.size(); ++c) {
        for (VertexId v : child.children[c].vertices) {
          auto it = std::lower_bound(child.vertices.begin(), child.vertices.end(), v);
          partition[static_cast<std::size_t>(it - child.vertices.begin())] =
              static_cast<int>(c + 1);
        }
      }
      RenderOptions opt;
      opt.draw_labels = config.render_labels;
      for (VertexId a : articulation) {
        auto it = std::lower_bound(child.vertices.begin(), child.vertices.end(), a);
        if (it != child.vertices.end() && *it == a)
          opt.highlight.push_back(static_cast<VertexId>(it - child.vertices.begin()));
      }
      emit("maps/cluster_" + std::to_string(k + 1) + ".svg",
           render_svg(sub, l, child.children.empty() ? nullptr : &partition, opt));
    }
  }

  result.outputs.push_back("manifest.json");
  manifest["outputs"] = result.outputs;
  result.manifest_json = manifest.dump(2) + "\n";
  write_file_atomic(result.outdir / "manifest.json", result.manifest_json);
  return result;
}

}  // namespace scimap
