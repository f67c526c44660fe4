#include "scimap/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace scimap {

namespace {

void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_i64(std::string& out, std::int64_t v) { put_u64(out, static_cast<std::uint64_t>(v)); }

void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

void put_string(std::string& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out += s;
}

class Reader {
 public:
  Reader(const std::string& data, const std::filesystem::path& path) : data_(data), path_(path) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data_[pos_++])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_++])) << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    std::uint32_t len = u32();
    need(len);
    std::string s = data_.substr(pos_, len);
    pos_ += len;
    return s;
  }
  void expect_magic(const char* magic) {
    need(8);
    if (std::memcmp(data_.data() + pos_, magic, 8) != 0)
      throw InputError(path_.string() + ": not a " + std::string(magic, 8) + " file");
    pos_ += 8;
  }
  void done() {
    if (pos_ != data_.size()) throw InputError(path_.string() + ": trailing bytes");
  }

 private:
  void need(std::size_t k) {
    if (pos_ + k > data_.size()) throw InputError(path_.string() + ": truncated file");
  }
  const std::string& data_;
  std::filesystem::path path_;
  std::size_t pos_ = 0;
};

void put_vertex_list(std::string& out, const std::vector<VertexId>& v) {
  put_u64(out, v.size());
  for (VertexId x : v) put_u32(out, x);
}

std::vector<VertexId> get_vertex_list(Reader& r) {
  std::uint64_t n = r.u64();
  std::vector<VertexId> v;
  v.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) v.push_back(r.u32());
  return v;
}

void put_labels(std::string& out, const std::vector<std::string>& labels) {
  put_u64(out, labels.size());
  for (const auto& l : labels) put_string(out, l);
}

std::vector<std::string> get_labels(Reader& r) {
  std::uint64_t n = r.u64();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back(r.str());
  return labels;
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

void write_matrix_file(const std::filesystem::path& path, const CitationMatrix& m) {
  std::string out(kMatrixMagic, 8);
  put_labels(out, m.labels());
  put_u64(out, m.entry_count());
  for (VertexId i = 0; i < m.journal_count(); ++i) {
    auto row = m.row(i);
    put_u64(out, row.size());
    for (const auto& e : row) {
      put_u32(out, e.cited);
      put_i64(out, e.count);
    }
  }
  write_file_atomic(path, out);
}

CitationMatrix read_matrix_file(const std::filesystem::path& path) {
  std::string data = read_file(path);
  Reader r(data, path);
  r.expect_magic(kMatrixMagic);
  auto labels = get_labels(r);
  CitationMatrix m;
  for (const auto& l : labels) m.add_journal(l);
  std::uint64_t entries = r.u64();
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    std::uint64_t row_len = r.u64();
    for (std::uint64_t k = 0; k < row_len; ++k) {
      std::uint32_t cited = r.u32();
      std::int64_t count = r.i64();
      m.add_entry(i, cited, count);
    }
  }
  r.done();
  m.finalize();
  if (m.entry_count() != entries) throw InputError(path.string() + ": entry count mismatch");
  return m;
}

void write_similarity_file(const std::filesystem::path& path, const SimilarityMatrix& s) {
  std::string out(kSimilarityMagic, 8);
  put_labels(out, s.labels());
  put_u8(out, static_cast<std::uint8_t>(s.measure()));
  for (double v : s.raw_values()) put_f64(out, v);
  for (std::uint8_t d : s.raw_defined()) put_u8(out, d);
  write_file_atomic(path, out);
}

SimilarityMatrix read_similarity_file(const std::filesystem::path& path) {
  std::string data = read_file(path);
  Reader r(data, path);
  r.expect_magic(kSimilarityMagic);
  auto labels = get_labels(r);
  std::uint8_t measure = r.u8();
  if (measure > 1) throw InputError(path.string() + ": unknown measure tag");
  SimilarityMatrix s(labels, static_cast<Measure>(measure));
  const std::size_t n = labels.size();
  std::vector<double> values(n * (n + 1) / 2);
  for (auto& v : values) v = r.f64();
  std::size_t idx = 0;
  std::vector<std::uint8_t> defined(values.size());
  for (auto& d : defined) d = r.u8();
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i; j < n; ++j, ++idx) s.set(i, j, values[idx], defined[idx] != 0);
  r.done();
  return s;
}

void write_graph_file(const std::filesystem::path& path, const SimilarityGraph& g) {
  std::string out(kGraphMagic, 8);
  put_labels(out, g.labels());
  put_f64(out, g.threshold());
  put_u64(out, g.edge_count());
  for (const auto& e : g.edges()) {
    put_u32(out, e.u);
    put_u32(out, e.v);
    put_f64(out, e.weight);
  }
  write_file_atomic(path, out);
}

SimilarityGraph read_graph_file(const std::filesystem::path& path) {
  std::string data = read_file(path);
  Reader r(data, path);
  r.expect_magic(kGraphMagic);
  auto labels = get_labels(r);
  double threshold = r.f64();
  SimilarityGraph g(std::move(labels), threshold);
  std::uint64_t edges = r.u64();
  for (std::uint64_t k = 0; k < edges; ++k) {
    std::uint32_t u = r.u32();
    std::uint32_t v = r.u32();
    double w = r.f64();
    g.add_edge(u, v, w);
  }
  r.done();
  g.finalize();
  return g;
}

void write_decomposition_file(const std::filesystem::path& path, const LabeledDecomposition& d) {
  std::string out(kDecompositionMagic, 8);
  put_labels(out, d.labels);
  put_u64(out, d.decomposition.components.size());
  for (const auto& c : d.decomposition.components) put_vertex_list(out, c);
  put_u64(out, d.decomposition.bigraph_pairs.size());
  for (const auto& [a, b] : d.decomposition.bigraph_pairs) {
    put_u32(out, a);
    put_u32(out, b);
  }
  put_vertex_list(out, d.decomposition.articulation_points);
  put_vertex_list(out, d.decomposition.isolates);
  write_file_atomic(path, out);
}

LabeledDecomposition read_decomposition_file(const std::filesystem::path& path) {
  std::string data = read_file(path);
  Reader r(data, path);
  r.expect_magic(kDecompositionMagic);
  LabeledDecomposition d;
  d.labels = get_labels(r);
  std::uint64_t nc = r.u64();
  for (std::uint64_t i = 0; i < nc; ++i) d.decomposition.components.push_back(get_vertex_list(r));
  std::uint64_t np = r.u64();
  for (std::uint64_t i = 0; i < np; ++i) {
    std::uint32_t a = r.u32();
    std::uint32_t b = r.u32();
    d.decomposition.bigraph_pairs.emplace_back(a, b);
  }
  d.decomposition.articulation_points = get_vertex_list(r);
  d.decomposition.isolates = get_vertex_list(r);
  r.done();
  return d;
}

std::string sniff_magic(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  char buf[8];
  in.read(buf, 8);
  if (in.gcount() != 8) return "";
  return std::string(buf, 8);
}

}  // namespace scimap
