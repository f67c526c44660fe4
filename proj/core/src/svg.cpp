#include "scimap/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "scimap/format.hpp"

namespace scimap {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377",
    "#dd7733", "#44aa99", "#9944cc", "#88bb22", "#cc4455", "#3366cc"};
constexpr const char* kUnassigned = "#bbbbbb";

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SimilarityGraph& g, const Layout& layout,
                       const std::vector<int>* partition, const RenderOptions& options) {
  const std::size_t n = g.vertex_count();
  if (layout.x.size() != n || layout.y.size() != n)
    throw InputError("layout does not cover the graph (missing coordinates)");
  if (partition && partition->size() != n)
    throw InputError("partition does not cover the graph");

  const double m = options.vertex_radius + 2.0;
  auto px = [&](VertexId v) { return m + layout.x[v] * (options.width - 2 * m); };
  auto py = [&](VertexId v) { return m + layout.y[v] * (options.height - 2 * m); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(options.width) +
         "\" height=\"" + format_number(options.height) + "\" viewBox=\"0 0 " +
         format_number(options.width) + " " + format_number(options.height) + "\">\n";

  for (const auto& e : g.edges()) {
    out += "<line x1=\"" + coord(px(e.u)) + "\" y1=\"" + coord(py(e.u)) + "\" x2=\"" +
           coord(px(e.v)) + "\" y2=\"" + coord(py(e.v)) +
           "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }

  std::vector<VertexId> highlight = options.highlight;
  std::sort(highlight.begin(), highlight.end());
  for (VertexId v = 0; v < n; ++v) {
    const bool lit = std::binary_search(highlight.begin(), highlight.end(), v);
    const char* fill;
    if (lit) {
      fill = "#ffffff";
    } else if (partition) {
      int c = (*partition)[v];
      fill = c >= 1 ? kPalette[static_cast<std::size_t>(c - 1) % kPalette.size()] : kUnassigned;
    } else {
      fill = kPalette[0];
    }
    out += "<circle cx=\"" + coord(px(v)) + "\" cy=\"" + coord(py(v)) + "\" r=\"" +
           format_number(options.vertex_radius) + "\" fill=\"" + fill + "\" stroke=\"" +
           (lit ? "#222222" : "#333333") + "\" stroke-width=\"" + (lit ? "2" : "1") + "\"/>\n";
  }

  if (options.draw_labels) {
    for (VertexId v = 0; v < n; ++v) {
      out += "<text x=\"" + coord(px(v)) + "\" y=\"" +
             coord(py(v) - options.vertex_radius - 2.0) +
             "\" font-size=\"10\" font-family=\"sans-serif\" text-anchor=\"middle\">" +
             escape_xml(g.label(v)) + "</text>\n";
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace scimap
