#include "scimap/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "scimap/format.hpp"

namespace scimap {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t n, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) fail(line, "not an integer: " + std::string(tok));
  if (v < 1 || v > n) fail(line, "vertex index out of range: " + std::string(tok));
  return v;
}

double parse_weight(std::string_view tok, std::size_t line) {
  std::string buf(tok);
  char* end = nullptr;
  double w = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(w))
    fail(line, "bad weight: " + buf);
  return w;
}

void append_pair_section(std::string& out, const char* header, const std::vector<Edge>& list) {
  if (list.empty()) return;
  out += header;
  out += '\n';
  for (const auto& e : list) {
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += ' ';
    out += format_number(e.weight);
    out += '\n';
  }
}

}  // namespace

std::string write_pajek_net(const PajekNetwork& net) {
  std::string out = "*Vertices " + std::to_string(net.labels.size()) + "\n";
  for (std::size_t i = 0; i < net.labels.size(); ++i) {
    if (net.labels[i].find_first_of("\"\r\n") != std::string::npos)
      throw InputError("label not representable in Pajek format: " + net.labels[i]);
    out += std::to_string(i + 1);
    out += " \"";
    out += net.labels[i];
    out += "\"\n";
  }
  auto sorted = [](std::vector<Edge> v) {
    std::sort(v.begin(), v.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return v;
  };
  append_pair_section(out, "*Edges", sorted(net.edges));
  append_pair_section(out, "*Arcs", sorted(net.arcs));
  return out;
}

PajekNetwork read_pajek_net(const std::string& text) {
  PajekNetwork net;
  enum class Section { header, vertices, edges, arcs };
  Section section = Section::header;
  std::size_t n = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line = strip(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (line.front() == '*') {
      auto toks = split_ws(line);
      if (iequals(toks[0], "*Vertices")) {
        if (section != Section::header) fail(line_no, "duplicate *Vertices section");
        if (toks.size() != 2) fail(line_no, "malformed *Vertices header");
        auto [p, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), n);
        if (ec != std::errc{} || p != toks[1].data() + toks[1].size())
          fail(line_no, "malformed *Vertices header");
        net.labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) net.labels[i] = std::to_string(i + 1);
        section = Section::vertices;
      } else if (iequals(toks[0], "*Edges")) {
        if (section == Section::header) fail(line_no, "*Edges before *Vertices");
        section = Section::edges;
      } else if (iequals(toks[0], "*Arcs")) {
        if (section == Section::header) fail(line_no, "*Arcs before *Vertices");
        section = Section::arcs;
      } else {
        fail(line_no, "unknown section: " + std::string(toks[0]));
      }
      continue;
    }
    switch (section) {
      case Section::header:
        fail(line_no, "content before *Vertices header");
      case Section::vertices: {
        auto toks = split_ws(line);
        std::size_t idx = parse_index(toks[0], n, line_no);
        std::size_t quote = line.find('"');
        if (quote == std::string_view::npos) {
          if (toks.size() > 1) net.labels[idx - 1] = std::string(toks[1]);
          break;
        }
        std::size_t close = line.find('"', quote + 1);
        if (close == std::string_view::npos) fail(line_no, "unterminated quote");
        net.labels[idx - 1] = std::string(line.substr(quote + 1, close - quote - 1));
        break;
      }
      case Section::edges:
      case Section::arcs: {
        auto toks = split_ws(line);
        if (toks.size() < 2 || toks.size() > 3) fail(line_no, "expected `u v [w]`");
        std::size_t u = parse_index(toks[0], n, line_no);
        std::size_t v = parse_index(toks[1], n, line_no);
        double w = toks.size() == 3 ? parse_weight(toks[2], line_no) : 1.0;
        Edge e{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w};
        if (section == Section::edges) {
          if (u == v) fail(line_no, "self loop in *Edges");
          if (e.u > e.v) std::swap(e.u, e.v);
          net.edges.push_back(e);
        } else {
          net.arcs.push_back(e);
        }
        break;
      }
    }
  }
  if (section == Section::header && !text.empty()) throw InputError("line 1: missing *Vertices header");
  if (section == Section::header) throw InputError("empty Pajek file");
  return net;
}

PajekNetwork pajek_from_graph(const SimilarityGraph& g) {
  PajekNetwork net;
  net.labels = g.labels();
  net.edges = g.edges();
  return net;
}

PajekNetwork pajek_from_matrix(const CitationMatrix& m) {
  PajekNetwork net;
  net.labels = m.labels();
  for (VertexId i = 0; i < m.journal_count(); ++i)
    for (const auto& e : m.row(i))
      net.arcs.push_back({i, e.cited, static_cast<double>(e.count)});
  return net;
}

SimilarityGraph graph_from_pajek(const PajekNetwork& net, double threshold) {
  std::vector<std::pair<VertexId, VertexId>> seen;
  seen.reserve(net.edges.size());
  for (const auto& e : net.edges)  // undirected: (u,v) and (v,u) are the same edge
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InputError("duplicate edge in Pajek network");
  SimilarityGraph g(net.labels, threshold);
  for (const auto& e : net.edges) g.add_edge(e.u, e.v, e.weight);
  g.finalize();
  return g;
}

CitationMatrix matrix_from_pajek(const PajekNetwork& net) {
  std::vector<std::pair<VertexId, VertexId>> seen;
  seen.reserve(net.arcs.size());
  for (const auto& e : net.arcs) seen.emplace_back(e.u, e.v);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InputError("duplicate arc in Pajek network");
  CitationMatrix m;
  for (const auto& label : net.labels) m.add_journal(label);
  for (const auto& e : net.arcs) {
    double rounded = std::round(e.weight);
    if (std::abs(e.weight - rounded) > 1e-9 || rounded < 1.0)
      throw InputError("arc weight is not a positive integer count: " + format_number(e.weight));
    m.add_entry(e.u, e.v, static_cast<long long>(rounded));
  }
  m.finalize();
  return m;
}

std::string write_pajek_clu(const std::vector<int>& partition) {
  std::string out = "*Vertices " + std::to_string(partition.size()) + "\n";
  for (int c : partition) {
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

std::vector<int> read_pajek_clu(const std::string& text) {
  std::vector<int> partition;
  std::size_t n = 0;
  bool have_header = false;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line = strip(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!have_header) {
      auto toks = split_ws(line);
      if (toks.size() != 2 || !iequals(toks[0], "*Vertices"))
        fail(line_no, "malformed *Vertices header");
      auto [p, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), n);
      if (ec != std::errc{} || p != toks[1].data() + toks[1].size())
        fail(line_no, "malformed *Vertices header");
      have_header = true;
      continue;
    }
    int c = 0;
    auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), c);
    if (ec != std::errc{} || p != line.data() + line.size())
      fail(line_no, "not an integer cluster id: " + std::string(line));
    partition.push_back(c);
  }
  if (!have_header) throw InputError("empty partition file");
  if (partition.size() != n)
    throw InputError("partition has " + std::to_string(partition.size()) + " entries, header says " +
                     std::to_string(n));
  return partition;
}

}  // namespace scimap
