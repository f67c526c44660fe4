#include "scimap/similarity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace scimap {

Measure measure_from_string(std::string_view s) {
  if (s == "pearson") return Measure::pearson;
  if (s == "cosine") return Measure::cosine;
  throw InputError("unknown similarity measure: " + std::string(s));
}

std::string_view to_string(Measure m) {
  return m == Measure::pearson ? "pearson" : "cosine";
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> labels, Measure measure)
    : labels_(std::move(labels)), measure_(measure) {
  const std::size_t n = labels_.size();
  values_.assign(n * (n + 1) / 2, 0.0);
  defined_.assign(n * (n + 1) / 2, 0);
}

std::size_t SimilarityMatrix::pair_index(VertexId i, VertexId j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = labels_.size();
  if (j >= n) throw std::logic_error("similarity index out of range");
  // row-major packed upper triangle: row i starts after i rows of n, n-1, ...
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

void SimilarityMatrix::set(VertexId i, VertexId j, double value, bool defined) {
  const std::size_t p = pair_index(i, j);
  values_[p] = value;
  defined_[p] = defined ? 1 : 0;
}

unsigned worker_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SCIMAP_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return std::max(1u, hw);
}

namespace detail {

namespace {

bool skipped(VertexId col, std::int64_t skip_a, std::int64_t skip_b) {
  return static_cast<std::int64_t>(col) == skip_a || static_cast<std::int64_t>(col) == skip_b;
}

struct SumCount {
  double sum = 0.0;
  std::size_t count = 0;
};

SumCount masked_sum(std::span<const WeightedCoord> v, std::int64_t skip_a, std::int64_t skip_b) {
  SumCount r;
  for (const auto& e : v) {
    if (skipped(e.col, skip_a, skip_b)) continue;
    r.sum += e.value;
    ++r.count;
  }
  return r;
}

}  // namespace

PairSimilarity pearson_pair(std::span<const WeightedCoord> x, std::span<const WeightedCoord> y,
                            std::size_t length, std::int64_t skip_a, std::int64_t skip_b) {
  if (length == 0) return {0.0, false};
  const auto sx = masked_sum(x, skip_a, skip_b);
  const auto sy = masked_sum(y, skip_a, skip_b);
  const double n = static_cast<double>(length);
  const double mx = sx.sum / n;
  const double my = sy.sum / n;

  double cov = 0.0, varx = 0.0, vary = 0.0;
  std::size_t union_count = 0;
  std::size_t ix = 0, iy = 0;
  while (ix < x.size() || iy < y.size()) {
    while (ix < x.size() && skipped(x[ix].col, skip_a, skip_b)) ++ix;
    while (iy < y.size() && skipped(y[iy].col, skip_a, skip_b)) ++iy;
    if (ix >= x.size() && iy >= y.size()) break;
    double xv = 0.0, yv = 0.0;
    bool has_x = false, has_y = false;
    if (ix < x.size() && (iy >= y.size() || x[ix].col <= y[iy].col)) {
      has_x = true;
      xv = x[ix].value;
    }
    if (iy < y.size() && (ix >= x.size() || y[iy].col <= x[ix].col)) {
      has_y = true;
      yv = y[iy].value;
    }
    if (has_x) ++ix;
    if (has_y) ++iy;
    ++union_count;
    cov += (xv - mx) * (yv - my);
    if (has_x) varx += (xv - mx) * (xv - mx);
    if (has_y) vary += (yv - my) * (yv - my);
  }
  // closed-form contribution of the positions where both rows store nothing
  cov += static_cast<double>(length - union_count) * mx * my;
  varx += static_cast<double>(length - sx.count) * mx * mx;
  vary += static_cast<double>(length - sy.count) * my * my;

  if (!(varx > 0.0) || !(vary > 0.0)) return {0.0, false};
  double r = cov / std::sqrt(varx * vary);
  r = std::clamp(r, -1.0, 1.0);
  return {r, true};
}

PairSimilarity cosine_pair(std::span<const WeightedCoord> x, std::span<const WeightedCoord> y,
                           std::size_t length, std::int64_t skip_a, std::int64_t skip_b) {
  if (length == 0) return {0.0, true};
  double dot = 0.0, nx = 0.0, ny = 0.0;
  std::size_t ix = 0, iy = 0;
  while (ix < x.size() && iy < y.size()) {
    if (skipped(x[ix].col, skip_a, skip_b)) { ++ix; continue; }
    if (skipped(y[iy].col, skip_a, skip_b)) { ++iy; continue; }
    if (x[ix].col < y[iy].col) ++ix;
    else if (y[iy].col < x[ix].col) ++iy;
    else {
      dot += x[ix].value * y[iy].value;
      ++ix;
      ++iy;
    }
  }
  for (const auto& e : x)
    if (!skipped(e.col, skip_a, skip_b)) nx += e.value * e.value;
  for (const auto& e : y)
    if (!skipped(e.col, skip_a, skip_b)) ny += e.value * e.value;
  if (!(nx > 0.0) || !(ny > 0.0)) return {0.0, true};  // zero vector: cosine 0 by convention
  double c = dot / std::sqrt(nx * ny);
  c = std::clamp(c, -1.0, 1.0);
  return {c, true};
}

}  // namespace detail

namespace {

using detail::PairSimilarity;
using detail::WeightedCoord;

using PairKernel = PairSimilarity (*)(std::span<const WeightedCoord>, std::span<const WeightedCoord>,
                                      std::size_t, std::int64_t, std::int64_t);

SimilarityMatrix pairwise_similarity(const CitationMatrix& m, Measure measure, DiagonalPolicy policy,
                                     unsigned threads, PairKernel kernel) {
  const std::size_t n = m.journal_count();
  if (n < 2) throw InputError("similarity needs at least 2 journals");

  std::vector<std::vector<WeightedCoord>> rows(n);
  for (VertexId i = 0; i < n; ++i) {
    rows[i].reserve(m.row(i).size());
    for (const auto& e : m.row(i)) rows[i].push_back({e.cited, static_cast<double>(e.count)});
  }

  SimilarityMatrix sm(m.labels(), measure);
  const unsigned nthreads = std::min<std::size_t>(worker_thread_count(threads), n);

  std::atomic<VertexId> next_row{0};
  auto work = [&]() {
    for (;;) {
      VertexId i = next_row.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      for (VertexId j = i; j < n; ++j) {
        PairSimilarity r;
        if (policy == DiagonalPolicy::include) {
          r = kernel(rows[i], rows[j], n, -1, -1);
        } else if (i == j) {
          r = kernel(rows[i], rows[j], n - 1, i, -1);
        } else {
          r = kernel(rows[i], rows[j], n - 2, i, j);
        }
        sm.set(i, j, r.value, r.defined);
      }
    }
  };

  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return sm;
}

}  // namespace

SimilarityMatrix pearson_similarity(const CitationMatrix& m, DiagonalPolicy policy, unsigned threads) {
  return pairwise_similarity(m, Measure::pearson, policy, threads, detail::pearson_pair);
}

SimilarityMatrix cosine_similarity(const CitationMatrix& m, DiagonalPolicy policy, unsigned threads) {
  return pairwise_similarity(m, Measure::cosine, policy, threads, detail::cosine_pair);
}

}  // namespace scimap
