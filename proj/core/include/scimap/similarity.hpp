#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scimap/citation_matrix.hpp"
#include "scimap/types.hpp"

namespace scimap {

enum class Measure : std::uint8_t { pearson = 0, cosine = 1 };

/// Whether the pair's own coordinates take part in each pairwise comparison.
/// `include` keeps the full citing rows (self-citation coordinates and all);
/// `exclude_pair` omits coordinates i and j from both vectors before
/// comparing journals i and j.
enum class DiagonalPolicy : std::uint8_t { include = 0, exclude_pair = 1 };

Measure measure_from_string(std::string_view s);
std::string_view to_string(Measure m);

/// Symmetric pairwise similarity over citing rows. Values are stored once per
/// unordered pair; pairs where the measure is mathematically undefined (zero
/// variance under Pearson) carry a defined=false flag and never become edges.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::vector<std::string> labels, Measure measure);

  std::size_t size() const { return labels_.size(); }
  Measure measure() const { return measure_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId i) const { return labels_.at(i); }

  double value(VertexId i, VertexId j) const { return values_[pair_index(i, j)]; }
  bool defined(VertexId i, VertexId j) const { return defined_[pair_index(i, j)] != 0; }
  void set(VertexId i, VertexId j, double value, bool defined);

  std::size_t pair_count() const { return values_.size(); }
  std::span<const double> raw_values() const { return values_; }
  std::span<const std::uint8_t> raw_defined() const { return defined_; }

 private:
  std::size_t pair_index(VertexId i, VertexId j) const;

  std::vector<std::string> labels_;
  Measure measure_ = Measure::pearson;
  std::vector<double> values_;         // packed upper triangle incl. diagonal
  std::vector<std::uint8_t> defined_;  // same layout
};

/// Worker count for pairwise computation: `requested` if positive, otherwise
/// hardware concurrency capped by the SCIMAP_THREADS environment variable.
unsigned worker_thread_count(unsigned requested = 0);

/// Pearson correlation of the citing row vectors of every unordered pair.
/// Output is bit-identical regardless of the number of worker threads.
SimilarityMatrix pearson_similarity(const CitationMatrix& m,
                                    DiagonalPolicy policy = DiagonalPolicy::include,
                                    unsigned threads = 0);

/// Cosine of the citing row vectors; a zero vector yields 0 against anything.
SimilarityMatrix cosine_similarity(const CitationMatrix& m,
                                   DiagonalPolicy policy = DiagonalPolicy::include,
                                   unsigned threads = 0);

namespace detail {

struct WeightedCoord {
  VertexId col = 0;
  double value = 0.0;
};

struct PairSimilarity {
  double value = 0.0;
  bool defined = false;
};

// Shared pairwise kernels over sparse coordinate lists (sorted by column).
// `length` is the logical vector length after skips; skip_a/skip_b are column
// indices to omit (-1 for none). Zero coordinates enter through closed-form
// blocks, so the accumulation is mean-centered and stable on zero-heavy rows.
PairSimilarity pearson_pair(std::span<const WeightedCoord> x, std::span<const WeightedCoord> y,
                            std::size_t length, std::int64_t skip_a = -1, std::int64_t skip_b = -1);
PairSimilarity cosine_pair(std::span<const WeightedCoord> x, std::span<const WeightedCoord> y,
                           std::size_t length, std::int64_t skip_a = -1, std::int64_t skip_b = -1);

}  // namespace detail

}  // namespace scimap
