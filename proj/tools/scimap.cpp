#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scimap/bicomponents.hpp"
#include "scimap/citation_matrix.hpp"
#include "scimap/csv_io.hpp"
#include "scimap/decompose.hpp"
#include "scimap/format.hpp"
#include "scimap/graph.hpp"
#include "scimap/layout.hpp"
#include "scimap/pajek.hpp"
#include "scimap/pipeline.hpp"
#include "scimap/serialize.hpp"
#include "scimap/similarity.hpp"
#include "scimap/svg.hpp"
#include "scimap/synthetic.hpp"
#include "scimap/types.hpp"

namespace {

using namespace scimap;

CitationMatrix load_matrix(const std::string& path) {
  if (sniff_magic(path) == kMatrixMagic) return read_matrix_file(path);
  return read_citation_file(path);
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad size list entry: " + tok);
    }
    pos = comma + 1;
  }
  return out;
}

void add_ingest(CLI::App& app) {
  auto* cmd = app.add_subcommand("ingest", "read a citation CSV and write the binary matrix");
  struct Opts {
    std::string input, out, csv;
    std::int64_t min_count = 1, min_citing = 0;
    bool drop_ones = false, do_transpose = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "citation CSV (.csv or .csv.gz) or matrix binary")
      ->required();
  cmd->add_option("--out", opts->out, "output matrix binary")->required();
  cmd->add_option("--csv", opts->csv, "also write the matrix back as CSV");
  cmd->add_option("--min-count", opts->min_count, "drop entries below this count");
  cmd->add_flag("--drop-ones", opts->drop_ones, "drop single-citation entries (same as --min-count 2)");
  cmd->add_option("--min-citing", opts->min_citing,
                  "exclude journals whose total citing is below this");
  cmd->add_flag("--transpose", opts->do_transpose, "swap citing and cited dimensions");
  cmd->callback([opts] {
    CitationMatrix m = load_matrix(opts->input);
    std::printf("journals %zu entries %zu\n", m.journal_count(), m.entry_count());
    std::int64_t min_count = std::max<std::int64_t>(opts->min_count, opts->drop_ones ? 2 : 1);
    if (min_count > 1) {
      m = apply_citation_threshold(m, min_count);
      std::printf("after count filter (>= %lld): entries %zu\n",
                  static_cast<long long>(min_count), m.entry_count());
    }
    if (opts->min_citing > 0) {
      auto filtered = filter_low_activity(m, opts->min_citing);
      std::printf("after activity filter (citing >= %lld): journals %zu (excluded %zu)\n",
                  static_cast<long long>(opts->min_citing), filtered.matrix.journal_count(),
                  filtered.excluded.size());
      m = std::move(filtered.matrix);
    }
    if (opts->do_transpose) m = transpose(m);
    write_matrix_file(opts->out, m);
    std::printf("wrote %s\n", opts->out.c_str());
    if (!opts->csv.empty()) {
      write_file_atomic(opts->csv, citation_csv(m));
      std::printf("wrote %s\n", opts->csv.c_str());
    }
  });
}

void add_stats(CLI::App& app) {
  auto* cmd = app.add_subcommand("stats", "print citation matrix statistics");
  auto input = std::make_shared<std::string>();
  cmd->add_option("input", *input, "matrix binary or CSV")->required();
  cmd->callback([input] {
    CitationMatrix m = load_matrix(*input);
    MatrixStats s = matrix_stats(m);
    std::int64_t total = 0;
    for (auto t : s.citing_totals) total += t;
    std::printf("journals             %zu\n", s.n);
    std::printf("entries              %zu\n", s.nonzero_count);
    std::printf("density              %s\n", format_number(s.density).c_str());
    std::printf("total citations      %lld\n", static_cast<long long>(total));
    std::printf("self citations       %lld\n", static_cast<long long>(s.self_citation_total));
    std::printf("uncited journals     %zu\n", s.uncited_count);
    std::printf("non-citing journals  %zu\n", s.non_citing_count);
  });
}

void add_similarity(CLI::App& app) {
  auto* cmd = app.add_subcommand("similarity", "pairwise similarity of citing patterns");
  struct Opts {
    std::string input, out, measure = "pearson", diagonal = "include";
    unsigned threads = 0;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "matrix binary or CSV")->required();
  cmd->add_option("--measure", opts->measure, "pearson or cosine")
      ->check(CLI::IsMember({"pearson", "cosine"}));
  cmd->add_option("--diagonal", opts->diagonal, "include or exclude-pair")
      ->check(CLI::IsMember({"include", "exclude-pair"}));
  cmd->add_option("--threads", opts->threads, "worker thread cap (0 = auto)");
  cmd->add_option("--out", opts->out, "output similarity binary")->required();
  cmd->callback([opts] {
    CitationMatrix m = load_matrix(opts->input);
    DiagonalPolicy policy = opts->diagonal == "exclude-pair" ? DiagonalPolicy::exclude_pair
                                                             : DiagonalPolicy::include;
    SimilarityMatrix s = opts->measure == "cosine"
                             ? cosine_similarity(m, policy, opts->threads)
                             : pearson_similarity(m, policy, opts->threads);
    std::size_t defined = 0;
    const std::size_t n = s.size();
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j)
        if (s.defined(i, j)) ++defined;
    write_similarity_file(opts->out, s);
    std::printf("journals %zu pairs %zu defined %zu\n", n, n * (n - 1) / 2, defined);
    std::printf("wrote %s\n", opts->out.c_str());
  });
}

void add_graph(CLI::App& app) {
  auto* cmd = app.add_subcommand("graph", "threshold graph from a similarity matrix");
  struct Opts {
    std::string input, out;
    double rmin = 0.8;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "similarity binary")->required();
  cmd->add_option("--rmin", opts->rmin, "similarity threshold")->required();
  cmd->add_option("--out", opts->out, "output graph binary")->required();
  cmd->callback([opts] {
    SimilarityMatrix s = read_similarity_file(opts->input);
    SimilarityGraph g = threshold_graph(s, opts->rmin);
    DegreeSummary deg = degree_summary(g);
    write_graph_file(opts->out, g);
    std::printf("vertices %zu edges %zu connected %zu\n", g.vertex_count(), g.edge_count(),
                deg.connected_count);
    std::printf("wrote %s\n", opts->out.c_str());
  });
}

void print_components_table(const BicomponentDecomposition& full,
                            const std::vector<std::size_t>& min_sizes) {
  std::vector<ComponentStats> stats;
  stats.reserve(min_sizes.size());
  for (std::size_t min_size : min_sizes) stats.push_back(size_distribution(filter_components(full, min_size)));
  auto row = [&](const char* name, auto getter) {
    std::printf("%-22s", name);
    for (const auto& s : stats) std::printf("%10zu", getter(s));
    std::printf("\n");
  };
  std::printf("%-22s", "minimum size");
  for (std::size_t m : min_sizes) std::printf("%10zu", m);
  std::printf("\n");
  row("bi-components", [](const ComponentStats& s) { return s.n_components; });
  row("journals included", [](const ComponentStats& s) { return s.n_journals_covered; });
  row("articulation points", [](const ComponentStats& s) { return s.n_articulation_points; });
  std::printf("bigraph pairs %zu, isolates %zu\n", full.bigraph_pairs.size(),
              full.isolates.size());
}

void add_components(CLI::App& app) {
  auto* cmd = app.add_subcommand("components", "bi-connected components and articulation points");
  struct Opts {
    std::string input, out;
    std::size_t min_size = 0;
    bool as_json = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "graph binary")->required();
  cmd->add_option("--min-size", opts->min_size, "drop components below this size (>= 3)");
  cmd->add_flag("--json", opts->as_json, "print the decomposition as JSON");
  cmd->add_option("--out", opts->out, "output decomposition binary");
  cmd->callback([opts] {
    SimilarityGraph g = read_graph_file(opts->input);
    BicomponentDecomposition full = bicomponents(g);
    BicomponentDecomposition reported =
        opts->min_size > 0 ? filter_components(full, opts->min_size) : full;
    if (opts->as_json) {
      auto labels_of = [&](const std::vector<VertexId>& ids) {
        std::vector<std::string> out;
        out.reserve(ids.size());
        for (VertexId v : ids) out.push_back(g.label(v));
        return out;
      };
      nlohmann::ordered_json j;
      auto comps = nlohmann::ordered_json::array();
      for (const auto& c : reported.components) comps.push_back(labels_of(c));
      j["components"] = std::move(comps);
      auto pairs = nlohmann::ordered_json::array();
      for (const auto& [a, b] : reported.bigraph_pairs)
        pairs.push_back({g.label(a), g.label(b)});
      j["bigraph_pairs"] = std::move(pairs);
      j["articulation_points"] = labels_of(reported.articulation_points);
      j["isolates"] = labels_of(reported.isolates);
      ComponentStats s = size_distribution(reported);
      j["stats"] = {{"components", s.n_components},
                    {"journals", s.n_journals_covered},
                    {"articulation_points", s.n_articulation_points},
                    {"largest", s.largest_size}};
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::vector<std::size_t> min_sizes{3};
      if (opts->min_size > 3) min_sizes.push_back(opts->min_size);
      print_components_table(full, min_sizes);
    }
    if (!opts->out.empty()) {
      write_decomposition_file(opts->out, {g.labels(), reported});
      std::printf("wrote %s\n", opts->out.c_str());
    }
  });
}

void add_decompose(CLI::App& app) {
  auto* cmd = app.add_subcommand("decompose", "hierarchical threshold-ladder decomposition");
  struct Opts {
    std::string input, out, classification, clu, ladder = "0.8,0.9,0.95";
    std::size_t min_size = 3, max_size = kDefaultMaxComponentSize;
    double report_level = 0.0;
    bool have_report = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "similarity binary")->required();
  cmd->add_option("--ladder", opts->ladder, "ascending thresholds, comma separated");
  cmd->add_option("--min-size", opts->min_size, "minimum component size (>= 3)");
  cmd->add_option("--max-size", opts->max_size, "split components larger than this");
  cmd->add_option("--out", opts->out, "output tree JSON")->required();
  cmd->add_option("--classification", opts->classification, "output classification CSV");
  cmd->add_option("--clu", opts->clu, "output Pajek partition of the top-level clusters");
  auto* report_opt = cmd->add_option("--report-level", opts->report_level,
                                     "print the articulation report for this rung");
  cmd->callback([opts, report_opt] {
    opts->have_report = report_opt->count() > 0;
    SimilarityMatrix s = read_similarity_file(opts->input);
    std::vector<double> ladder = parse_ladder(opts->ladder);
    ClusterTree tree = decompose(s, ladder, opts->min_size, opts->max_size);
    write_file_atomic(opts->out, tree_to_json(tree));
    std::printf("clusters %zu\n", tree.root.children.size());
    std::printf("wrote %s\n", opts->out.c_str());
    if (!opts->classification.empty()) {
      write_file_atomic(opts->classification, classification_csv(classify(tree)));
      std::printf("wrote %s\n", opts->classification.c_str());
    }
    if (!opts->clu.empty()) {
      write_file_atomic(opts->clu, write_pajek_clu(clu_from_tree(tree)));
      std::printf("wrote %s\n", opts->clu.c_str());
    }
    if (opts->have_report) {
      auto report = articulation_report(tree, opts->report_level);
      std::printf("articulation points at %s: %zu\n", format_number(opts->report_level).c_str(),
                  report.size());
      for (const auto& j : report) std::printf("  %s\n", j.label.c_str());
    }
  });
}

void add_layout(CLI::App& app) {
  auto* cmd = app.add_subcommand("layout", "2D coordinates for a graph");
  struct Opts {
    std::string input, out, algo = "auto";
    std::uint64_t seed = 1;
    std::size_t iters = 500;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "graph binary")->required();
  cmd->add_option("--algo", opts->algo, "kk, fr or auto")
      ->check(CLI::IsMember({"kk", "fr", "auto"}));
  cmd->add_option("--seed", opts->seed, "seed for the initial placement");
  cmd->add_option("--iters", opts->iters, "iteration budget");
  cmd->add_option("--out", opts->out, "output layout JSON")->required();
  cmd->callback([opts] {
    SimilarityGraph g = read_graph_file(opts->input);
    LayoutParams p;
    p.seed = opts->seed;
    p.max_iterations = opts->iters;
    Layout l = layout_graph(g, p, opts->algo);
    write_file_atomic(opts->out, layout_to_json(l, g.labels()));
    if (l.final_stress)
      std::printf("algorithm %s iterations %zu stress %s\n", l.algorithm.c_str(),
                  l.iterations_used, format_number(*l.final_stress).c_str());
    else
      std::printf("algorithm %s iterations %zu\n", l.algorithm.c_str(), l.iterations_used);
    std::printf("wrote %s\n", opts->out.c_str());
  });
}

void add_render(CLI::App& app) {
  auto* cmd = app.add_subcommand("render", "SVG map from a graph and a layout");
  struct Opts {
    std::string graph, layout, out, clu, highlight;
    double radius = 4.0;
    bool labels = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("graph", opts->graph, "graph binary")->required();
  cmd->add_option("layout", opts->layout, "layout JSON")->required();
  cmd->add_option("--clu", opts->clu, "Pajek partition for vertex colors");
  cmd->add_option("--highlight", opts->highlight, "labels to draw white, comma separated");
  cmd->add_option("--radius", opts->radius, "vertex radius");
  cmd->add_flag("--labels", opts->labels, "draw vertex labels");
  cmd->add_option("--out", opts->out, "output SVG")->required();
  cmd->callback([opts] {
    SimilarityGraph g = read_graph_file(opts->graph);
    std::vector<std::string> layout_labels;
    Layout l = layout_from_json(read_file(opts->layout), &layout_labels);
    if (!layout_labels.empty() && layout_labels != g.labels())
      throw InputError("layout labels do not match the graph");
    RenderOptions render_opts;
    render_opts.vertex_radius = opts->radius;
    render_opts.draw_labels = opts->labels;
    std::vector<int> partition;
    if (!opts->clu.empty()) {
      partition = read_pajek_clu(read_file(opts->clu));
      if (partition.size() != g.vertex_count())
        throw InputError("partition size does not match the graph");
    }
    if (!opts->highlight.empty()) {
      std::size_t pos = 0;
      const std::string& text = opts->highlight;
      while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string label = text.substr(pos, comma - pos);
        bool found = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (g.label(v) == label) {
            render_opts.highlight.push_back(v);
            found = true;
            break;
          }
        }
        if (!found) throw InputError("unknown label: " + label);
        pos = comma + 1;
      }
    }
    write_file_atomic(opts->out,
                      render_svg(g, l, partition.empty() ? nullptr : &partition, render_opts));
    std::printf("wrote %s\n", opts->out.c_str());
  });
}

void add_export_pajek(CLI::App& app) {
  auto* cmd = app.add_subcommand("export-pajek", "write a Pajek .net file");
  struct Opts {
    std::string input, out;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("input", opts->input, "matrix or graph binary (or citation CSV)")->required();
  cmd->add_option("--out", opts->out, "output .net file")->required();
  cmd->callback([opts] {
    std::string magic = sniff_magic(opts->input);
    PajekNetwork net;
    if (magic == kGraphMagic)
      net = pajek_from_graph(read_graph_file(opts->input));
    else
      net = pajek_from_matrix(load_matrix(opts->input));
    write_file_atomic(opts->out, write_pajek_net(net));
    std::printf("wrote %s\n", opts->out.c_str());
  });
}

void add_synth(CLI::App& app) {
  auto* cmd = app.add_subcommand("synth", "generate a planted-block citation matrix");
  struct Opts {
    std::string blocks, out, csv;
    double intra = 50.0, inter = 0.0;
    std::size_t bridges = 0;
    std::uint64_t seed = 1;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--blocks", opts->blocks, "block sizes, comma separated")->required();
  cmd->add_option("--intra", opts->intra, "within-block citation rate");
  cmd->add_option("--inter", opts->inter, "between-block citation rate");
  cmd->add_option("--bridges", opts->bridges, "number of bridge journals");
  cmd->add_option("--seed", opts->seed, "generator seed");
  cmd->add_option("--out", opts->out, "output matrix binary")->required();
  cmd->add_option("--csv", opts->csv, "also write the matrix as CSV");
  cmd->callback([opts] {
    SyntheticSpec spec;
    spec.blocks = parse_size_list(opts->blocks);
    spec.intra_rate = opts->intra;
    spec.inter_rate = opts->inter;
    spec.bridge_journals = opts->bridges;
    spec.seed = opts->seed;
    CitationMatrix m = generate_synthetic(spec);
    write_matrix_file(opts->out, m);
    std::printf("journals %zu entries %zu\n", m.journal_count(), m.entry_count());
    std::printf("wrote %s\n", opts->out.c_str());
    if (!opts->csv.empty()) {
      write_file_atomic(opts->csv, citation_csv(m));
      std::printf("wrote %s\n", opts->csv.c_str());
    }
  });
}

void add_pipeline(CLI::App& app) {
  auto* cmd = app.add_subcommand("pipeline", "run the full decomposition pipeline");
  auto config_path = std::make_shared<std::string>();
  cmd->add_option("--config", *config_path, "key = value run configuration")->required();
  cmd->callback([config_path] {
    PipelineConfig cfg = read_pipeline_config(*config_path);
    PipelineResult result = run_pipeline(cfg);
    std::printf("clusters %zu\n", result.tree.root.children.size());
    for (const auto& name : result.outputs)
      std::printf("wrote %s\n", (result.outdir / name).string().c_str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"journal citation network decomposition and mapping"};
  app.set_version_flag("--version", "scimap 0.1.0");
  app.require_subcommand(1);
  add_ingest(app);
  add_stats(app);
  add_similarity(app);
  add_graph(app);
  add_components(app);
  add_decompose(app);
  add_layout(app);
  add_render(app);
  add_export_pajek(app);
  add_synth(app);
  add_pipeline(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const scimap::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
