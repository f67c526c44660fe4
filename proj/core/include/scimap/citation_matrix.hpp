#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scimap/types.hpp"

namespace scimap {

struct CitationEntry {
  VertexId cited = 0;
  std::int64_t count = 0;  // always >= 1

  friend bool operator==(const CitationEntry&, const CitationEntry&) = default;
};

/// Sparse directed matrix of citing -> cited counts with journal labels.
/// Rows are kept sorted by cited index; call finalize() after the last
/// add_entry(). Immutable after that and safe to share across threads.
class CitationMatrix {
 public:
  CitationMatrix() = default;

  /// Registers a journal and returns its dense index. Duplicate or empty
  /// labels are InputError.
  VertexId add_journal(std::string label);

  /// Index for an existing label, registering it on first sight.
  VertexId intern_journal(std::string_view label);

  /// count must be positive; duplicate (citing, cited) keys are detected in
  /// finalize(). Indices must already be registered.
  void add_entry(VertexId citing, VertexId cited, std::int64_t count);

  /// Sorts rows and verifies there are no duplicate keys.
  void finalize();

  std::size_t journal_count() const { return labels_.size(); }
  std::size_t entry_count() const { return entry_count_; }

  const std::string& label(VertexId i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  /// Entries of one citing row, sorted by cited index.
  std::span<const CitationEntry> row(VertexId citing) const;

  /// Stored count at (citing, cited), or 0 when the cell is empty.
  std::int64_t at(VertexId citing, VertexId cited) const;

  std::int64_t row_sum(VertexId citing) const;

  friend bool operator==(const CitationMatrix& a, const CitationMatrix& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<CitationEntry>> rows_;
  std::size_t entry_count_ = 0;
  bool finalized_ = false;
};

struct MatrixStats {
  std::size_t n = 0;
  std::size_t nonzero_count = 0;
  double density = 0.0;  // nonzero / n^2, 0 for an empty matrix
  std::size_t uncited_count = 0;      // journals with zero in-links
  std::size_t non_citing_count = 0;   // journals with zero out-links
  std::int64_t self_citation_total = 0;
  std::vector<std::int64_t> citing_totals;  // per-journal row sums, diagonal included
};

MatrixStats matrix_stats(const CitationMatrix& m);

/// Drops entries with count < min_count. Journals stay in place even when all
/// their entries vanish.
CitationMatrix apply_citation_threshold(const CitationMatrix& m, std::int64_t min_count);

struct LowActivityFilter {
  CitationMatrix matrix;            // re-indexed densely, ascending original index
  std::vector<JournalId> excluded;  // in label order, indices refer to the input matrix
};

/// Removes journals whose total citing (row sum, diagonal included) is below
/// min_total_citing, from both dimensions.
LowActivityFilter filter_low_activity(const CitationMatrix& m, std::int64_t min_total_citing = 12);

/// Swaps the citing and cited dimensions.
CitationMatrix transpose(const CitationMatrix& m);

}  // namespace scimap
