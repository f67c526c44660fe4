#include "scimap/citation_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scimap {

VertexId CitationMatrix::add_journal(std::string label) {
  if (label.empty()) throw InputError("journal label must not be empty");
  auto [it, inserted] = index_.try_emplace(label, static_cast<VertexId>(labels_.size()));
  if (!inserted) throw InputError("duplicate journal label: " + label);
  labels_.push_back(std::move(label));
  rows_.emplace_back();
  return it->second;
}

VertexId CitationMatrix::intern_journal(std::string_view label) {
  if (auto found = find(label)) return *found;
  return add_journal(std::string(label));
}

void CitationMatrix::add_entry(VertexId citing, VertexId cited, std::int64_t count) {
  if (citing >= labels_.size() || cited >= labels_.size())
    throw std::logic_error("citation entry index out of range");
  if (count <= 0) throw InputError("citation count must be positive");
  rows_[citing].push_back({cited, count});
  ++entry_count_;
  finalized_ = false;
}

void CitationMatrix::finalize() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(),
              [](const CitationEntry& a, const CitationEntry& b) { return a.cited < b.cited; });
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k - 1].cited == row[k].cited)
        throw std::logic_error("duplicate (citing, cited) entry");
  }
  finalized_ = true;
}

std::optional<VertexId> CitationMatrix::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const CitationEntry> CitationMatrix::row(VertexId citing) const {
  return rows_.at(citing);
}

std::int64_t CitationMatrix::at(VertexId citing, VertexId cited) const {
  const auto& row = rows_.at(citing);
  auto it = std::lower_bound(row.begin(), row.end(), cited,
                             [](const CitationEntry& e, VertexId c) { return e.cited < c; });
  if (it != row.end() && it->cited == cited) return it->count;
  return 0;
}

std::int64_t CitationMatrix::row_sum(VertexId citing) const {
  const auto& row = rows_.at(citing);
  return std::accumulate(row.begin(), row.end(), std::int64_t{0},
                         [](std::int64_t acc, const CitationEntry& e) { return acc + e.count; });
}

MatrixStats matrix_stats(const CitationMatrix& m) {
  MatrixStats s;
  s.n = m.journal_count();
  s.nonzero_count = m.entry_count();
  s.density = s.n == 0 ? 0.0
                       : static_cast<double>(s.nonzero_count) /
                             (static_cast<double>(s.n) * static_cast<double>(s.n));
  s.citing_totals.resize(s.n, 0);
  std::vector<bool> cited(s.n, false);
  for (VertexId i = 0; i < s.n; ++i) {
    for (const auto& e : m.row(i)) {
      s.citing_totals[i] += e.count;
      cited[e.cited] = true;
      if (e.cited == i) s.self_citation_total += e.count;
    }
    if (m.row(i).empty()) ++s.non_citing_count;
  }
  for (VertexId j = 0; j < s.n; ++j)
    if (!cited[j]) ++s.uncited_count;
  return s;
}

CitationMatrix apply_citation_threshold(const CitationMatrix& m, std::int64_t min_count) {
  if (min_count < 1) throw InputError("min_count must be >= 1");
  CitationMatrix out;
  for (const auto& label : m.labels()) out.add_journal(label);
  for (VertexId i = 0; i < m.journal_count(); ++i)
    for (const auto& e : m.row(i))
      if (e.count >= min_count) out.add_entry(i, e.cited, e.count);
  out.finalize();
  return out;
}

LowActivityFilter filter_low_activity(const CitationMatrix& m, std::int64_t min_total_citing) {
  LowActivityFilter result;
  const std::size_t n = m.journal_count();
  std::vector<VertexId> remap(n, 0);
  std::vector<bool> keep(n, false);
  for (VertexId i = 0; i < n; ++i) {
    if (m.row_sum(i) >= min_total_citing) {
      keep[i] = true;
    } else {
      result.excluded.push_back({i, m.label(i)});
    }
  }
  std::sort(result.excluded.begin(), result.excluded.end(),
            [](const JournalId& a, const JournalId& b) { return a.label < b.label; });
  for (VertexId i = 0; i < n; ++i)
    if (keep[i]) remap[i] = result.matrix.add_journal(m.label(i));
  for (VertexId i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    for (const auto& e : m.row(i))
      if (keep[e.cited]) result.matrix.add_entry(remap[i], remap[e.cited], e.count);
  }
  result.matrix.finalize();
  return result;
}

CitationMatrix transpose(const CitationMatrix& m) {
  CitationMatrix out;
  for (const auto& label : m.labels()) out.add_journal(label);
  for (VertexId i = 0; i < m.journal_count(); ++i)
    for (const auto& e : m.row(i)) out.add_entry(e.cited, i, e.count);
  out.finalize();
  return out;
}

}  // namespace scimap
