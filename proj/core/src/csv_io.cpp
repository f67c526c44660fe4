#include "scimap/csv_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace scimap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

CitationMatrix parse_citation_csv(std::istream& in) {
  CitationMatrix m;
  std::unordered_map<std::uint64_t, std::size_t> seen;  // (citing, cited) -> line
  std::string line;
  std::size_t lineno = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    std::string_view rest = line;
    std::string_view fields[3];
    std::size_t nfields = 0;
    while (true) {
      auto comma = rest.find(',');
      std::string_view field = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      if (nfields < 3) fields[nfields] = trim(field);
      ++nfields;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (nfields != 3) fail(lineno, "expected 3 fields (citing,cited,count), got " + std::to_string(nfields));

    if (first_record) {
      first_record = false;
      if (iequals(fields[0], "citing") && iequals(fields[1], "cited") && iequals(fields[2], "count"))
        continue;  // header
    }

    if (fields[0].empty() || fields[1].empty()) fail(lineno, "empty journal label");

    std::int64_t count = 0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), count);
    if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size())
      fail(lineno, "count is not an integer: '" + std::string(fields[2]) + "'");
    if (count <= 0) fail(lineno, "non-positive count: " + std::string(fields[2]));

    VertexId citing = m.intern_journal(fields[0]);
    VertexId cited = m.intern_journal(fields[1]);
    std::uint64_t key = (static_cast<std::uint64_t>(citing) << 32) | cited;
    if (!seen.try_emplace(key, lineno).second)
      fail(lineno, "duplicate record for (" + std::string(fields[0]) + ", " + std::string(fields[1]) + ")");
    m.add_entry(citing, cited, count);
  }
  m.finalize();
  return m;
}

CitationMatrix parse_citation_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_citation_csv(in);
}

CitationMatrix read_citation_file(const std::string& path) {
  if (path.size() > 3 && path.ends_with(".gz")) {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (!gz) throw InputError("cannot open file: " + path);
    std::string text;
    char buf[1 << 16];
    int got = 0;
    while ((got = gzread(gz, buf, sizeof(buf))) > 0) text.append(buf, static_cast<std::size_t>(got));
    bool bad = got < 0;
    gzclose(gz);
    if (bad) throw InputError("gzip read error in: " + path);
    return parse_citation_csv(text);
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return parse_citation_csv(in);
}

void write_citation_csv(const CitationMatrix& m, std::ostream& out) {
  for (const auto& label : m.labels())
    if (label.find_first_of(",\r\n") != std::string::npos)
      throw InputError("label not representable in CSV: " + label);
  out << "citing,cited,count\n";
  for (VertexId i = 0; i < m.journal_count(); ++i)
    for (const auto& e : m.row(i))
      out << m.label(i) << ',' << m.label(e.cited) << ',' << e.count << '\n';
}

std::string citation_csv(const CitationMatrix& m) {
  std::ostringstream out;
  write_citation_csv(m, out);
  return out.str();
}

}  // namespace scimap
