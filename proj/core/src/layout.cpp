#include "scimap/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "scimap/rng.hpp"

namespace scimap {

namespace {

constexpr double kMinDistance = 1e-12;

std::vector<std::vector<std::uint32_t>> hop_distances(const SimilarityGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, kUnreached));
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (VertexId w : g.neighbors(v)) {
        if (d[w] == kUnreached) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::uint32_t dv : d)
      if (dv == kUnreached) throw InputError("graph is not connected");
  }
  return dist;
}

// Scale and translate into [0,1]^2: shrink only if the bounding box exceeds the
// frame, then center. Returns the scale factor applied.
double fit_to_frame(std::vector<double>& x, std::vector<double>& y) {
  if (x.empty()) return 1.0;
  auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
  const double w = *xmax_it - *xmin_it, h = *ymax_it - *ymin_it;
  double s = 1.0;
  if (w > 1.0) s = std::min(s, 1.0 / w);
  if (h > 1.0) s = std::min(s, 1.0 / h);
  const double cx = (*xmin_it + *xmax_it) / 2, cy = (*ymin_it + *ymax_it) / 2;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = 0.5 + s * (x[i] - cx);
    y[i] = 0.5 + s * (y[i] - cy);
    x[i] = std::clamp(x[i], 0.0, 1.0);  // guard rounding at the frame edge
    y[i] = std::clamp(y[i], 0.0, 1.0);
  }
  return s;
}

}  // namespace

void seeded_positions(std::size_t n, std::uint64_t seed, std::vector<double>& x,
                      std::vector<double>& y) {
  SplitMix64 rng(seed);
  x.resize(n);
  y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.next_double();
    y[i] = rng.next_double();
  }
}

Layout layout_kamada_kawai(const SimilarityGraph& g, const LayoutParams& p) {
  const std::size_t n = g.vertex_count();
  Layout l;
  l.algorithm = "kk";
  l.ideal_edge_length = p.ideal_edge_length;
  if (n == 0) {
    l.final_stress = 0.0;
    l.initial_stress = 0.0;
    return l;
  }
  if (n == 1) {
    l.x = {0.5};
    l.y = {0.5};
    l.final_stress = 0.0;
    l.initial_stress = 0.0;
    return l;
  }
  const auto dist = hop_distances(g);
  const double L = p.ideal_edge_length;

  std::vector<double> x, y;
  seeded_positions(n, p.seed, x, y);

  auto vertex_stress = [&](VertexId m, double mx, double my) {
    double e = 0.0;
    for (VertexId j = 0; j < n; ++j) {
      if (j == m) continue;
      const double ideal = L * dist[m][j];
      const double k = 1.0 / (static_cast<double>(dist[m][j]) * dist[m][j]);
      const double d = std::max(kMinDistance, std::hypot(mx - x[j], my - y[j]));
      e += k * (d - ideal) * (d - ideal);
    }
    return e;
  };
  auto total_stress = [&]() {
    double e = 0.0;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) {
        const double ideal = L * dist[i][j];
        const double k = 1.0 / (static_cast<double>(dist[i][j]) * dist[i][j]);
        const double d = std::max(kMinDistance, std::hypot(x[i] - x[j], y[i] - y[j]));
        e += k * (d - ideal) * (d - ideal);
      }
    return e;
  };
  auto gradient = [&](VertexId m, double& gx, double& gy) {
    gx = gy = 0.0;
    for (VertexId j = 0; j < n; ++j) {
      if (j == m) continue;
      const double ideal = L * dist[m][j];
      const double k = 1.0 / (static_cast<double>(dist[m][j]) * dist[m][j]);
      const double dx = x[m] - x[j], dy = y[m] - y[j];
      const double d = std::max(kMinDistance, std::hypot(dx, dy));
      gx += k * dx * (1.0 - ideal / d);
      gy += k * dy * (1.0 - ideal / d);
    }
  };

  const double e_init = total_stress();
  std::vector<double> gxs(n), gys(n);
  std::vector<VertexId> order(n);
  std::size_t iters = 0;
  for (; iters < p.max_iterations; ++iters) {
    for (VertexId m = 0; m < n; ++m) gradient(m, gxs[m], gys[m]);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId lhs, VertexId rhs) {
      return std::hypot(gxs[lhs], gys[lhs]) > std::hypot(gxs[rhs], gys[rhs]);
    });
    if (std::hypot(gxs[order[0]], gys[order[0]]) < p.convergence_epsilon) break;

    // Move the steepest vertex. The per-vertex energy is not convex (its
    // Hessian goes indefinite once pair distances fall below the ideal), so
    // an unguarded Newton step may point uphill; retreat to plain descent in
    // that case, and if even descent cannot improve this vertex, give the
    // next-steepest one a turn instead of stalling the whole relaxation.
    bool moved = false;
    for (VertexId worst : order) {
      const double wgx = gxs[worst], wgy = gys[worst];
      if (std::hypot(wgx, wgy) < p.convergence_epsilon) break;

      double a = 0.0, b = 0.0, c = 0.0;  // Hessian [a b; b c] at `worst`
      for (VertexId j = 0; j < n; ++j) {
        if (j == worst) continue;
        const double ideal = L * dist[worst][j];
        const double k = 1.0 / (static_cast<double>(dist[worst][j]) * dist[worst][j]);
        const double dx = x[worst] - x[j], dy = y[worst] - y[j];
        const double d = std::max(kMinDistance, std::hypot(dx, dy));
        const double d3 = d * d * d;
        a += k * (1.0 - ideal * dy * dy / d3);
        b += k * ideal * dx * dy / d3;
        c += k * (1.0 - ideal * dx * dx / d3);
      }
      double det = a * c - b * b;
      double sx, sy;
      if (std::abs(det) < 1e-15) {
        sx = -wgx;  // singular Hessian: fall back to plain descent
        sy = -wgy;
      } else {
        sx = (-c * wgx + b * wgy) / det;
        sy = (b * wgx - a * wgy) / det;
      }
      if (sx * wgx + sy * wgy >= 0.0) {  // uphill Newton step
        sx = -wgx;
        sy = -wgy;
      }
      const double before = vertex_stress(worst, x[worst], y[worst]);
      double step = 1.0;
      for (int halving = 0; halving < 40; ++halving) {
        const double nx = x[worst] + step * sx, ny = y[worst] + step * sy;
        if (vertex_stress(worst, nx, ny) < before) {
          x[worst] = nx;
          y[worst] = ny;
          moved = true;
          break;
        }
        step /= 2;
      }
      if (moved) break;
    }
    if (!moved) break;  // no vertex can improve: at numerical precision
  }
  const double e_final = total_stress();

  const double s = fit_to_frame(x, y);
  l.x = std::move(x);
  l.y = std::move(y);
  l.ideal_edge_length = s * L;
  l.initial_stress = s * s * e_init;
  l.final_stress = s * s * e_final;
  l.iterations_used = iters;
  return l;
}

namespace {

// Grid buckets for approximate repulsion on large graphs: only vertices within
// the surrounding 3x3 cells (cell side 2k) repel each other.
struct RepulsionGrid {
  double cell = 0.0;
  std::size_t cols = 0, rows = 0;
  std::vector<std::vector<VertexId>> buckets;

  void build(const std::vector<double>& x, const std::vector<double>& y, double k) {
    cell = std::max(1e-6, 2.0 * k);
    cols = static_cast<std::size_t>(1.0 / cell) + 1;
    rows = cols;
    buckets.assign(cols * rows, {});
    for (VertexId v = 0; v < x.size(); ++v) buckets[index_of(x[v], y[v])].push_back(v);
  }
  std::size_t index_of(double px, double py) const {
    auto cx = std::min(cols - 1, static_cast<std::size_t>(std::clamp(px, 0.0, 1.0) / cell));
    auto cy = std::min(rows - 1, static_cast<std::size_t>(std::clamp(py, 0.0, 1.0) / cell));
    return cy * cols + cx;
  }
};

}  // namespace

Layout layout_fruchterman_reingold(const SimilarityGraph& g, const LayoutParams& p,
                                   FrStepTrace* trace) {
  const std::size_t n = g.vertex_count();
  Layout l;
  l.algorithm = "fr";
  if (n == 0) {
    l.ideal_edge_length = 0.0;
    return l;
  }
  const double k = p.ideal_edge_length * std::sqrt(1.0 / static_cast<double>(n));
  l.ideal_edge_length = k;

  std::vector<double> x, y;
  seeded_positions(n, p.seed, x, y);
  if (n == 1) {
    l.x = std::move(x);
    l.y = std::move(y);
    return l;
  }

  const bool exact = n <= 2000;
  RepulsionGrid grid;
  std::vector<double> dx(n), dy(n);
  double t = p.initial_temperature;
  std::size_t iters = 0;
  for (; iters < p.max_iterations; ++iters) {
    std::fill(dx.begin(), dx.end(), 0.0);
    std::fill(dy.begin(), dy.end(), 0.0);

    auto repel = [&](VertexId u, VertexId v) {
      double ddx = x[u] - x[v], ddy = y[u] - y[v];
      double d = std::hypot(ddx, ddy);
      if (d < kMinDistance) {  // coincident: push apart along a fixed axis
        ddx = 1.0;
        ddy = 0.0;
        d = kMinDistance;
      }
      const double f = k * k / d;
      dx[u] += ddx / d * f;
      dy[u] += ddy / d * f;
      dx[v] -= ddx / d * f;
      dy[v] -= ddy / d * f;
    };
    if (exact) {
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) repel(u, v);
    } else {
      grid.build(x, y, k);
      for (VertexId u = 0; u < n; ++u) {
        const auto cx = std::min(grid.cols - 1,
                                 static_cast<std::size_t>(std::clamp(x[u], 0.0, 1.0) / grid.cell));
        const auto cy = std::min(grid.rows - 1,
                                 static_cast<std::size_t>(std::clamp(y[u], 0.0, 1.0) / grid.cell));
        for (std::size_t gy = cy == 0 ? 0 : cy - 1; gy <= std::min(grid.rows - 1, cy + 1); ++gy) {
          for (std::size_t gx = cx == 0 ? 0 : cx - 1; gx <= std::min(grid.cols - 1, cx + 1); ++gx) {
            for (VertexId v : grid.buckets[gy * grid.cols + gx]) {
              if (v <= u) continue;  // each pair once, from the smaller index
              repel(u, v);
            }
          }
        }
      }
    }

    for (const auto& e : g.edges()) {
      double ddx = x[e.u] - x[e.v], ddy = y[e.u] - y[e.v];
      double d = std::hypot(ddx, ddy);
      if (d < kMinDistance) continue;
      const double f = d * d / k;
      dx[e.u] -= ddx / d * f;
      dy[e.u] -= ddy / d * f;
      dx[e.v] += ddx / d * f;
      dy[e.v] += ddy / d * f;
    }

    double max_disp = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      const double d = std::hypot(dx[v], dy[v]);
      const double capped = std::min(d, t);
      if (d > kMinDistance) {
        const double nx = std::clamp(x[v] + dx[v] / d * capped, 0.0, 1.0);
        const double ny = std::clamp(y[v] + dy[v] / d * capped, 0.0, 1.0);
        max_disp = std::max(max_disp, std::hypot(nx - x[v], ny - y[v]));
        x[v] = nx;
        y[v] = ny;
      }
    }
    if (trace) {
      trace->temperatures.push_back(t);
      trace->max_displacements.push_back(max_disp);
    }
    t *= p.cooling_factor;
    if (max_disp < p.convergence_epsilon) {
      ++iters;
      break;
    }
  }
  l.x = std::move(x);
  l.y = std::move(y);
  l.iterations_used = iters;
  return l;
}

double stress(const SimilarityGraph& g, const Layout& l) {
  if (!(l.ideal_edge_length > 0.0)) throw InputError("layout has no positive ideal edge length");
  if (l.x.size() != g.vertex_count() || l.y.size() != g.vertex_count())
    throw InputError("layout does not cover the graph");
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0.0;
  const auto dist = hop_distances(g);
  double e = 0.0;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) {
      const double ideal = l.ideal_edge_length * dist[i][j];
      const double k = 1.0 / (static_cast<double>(dist[i][j]) * dist[i][j]);
      const double d = std::max(kMinDistance, std::hypot(l.x[i] - l.x[j], l.y[i] - l.y[j]));
      e += k * (d - ideal) * (d - ideal);
    }
  return e;
}

Layout layout_graph(const SimilarityGraph& g, const LayoutParams& p, std::string_view algo) {
  if (algo != "kk" && algo != "fr" && algo != "auto")
    throw InputError("unknown layout algorithm: " + std::string(algo));
  const std::size_t n = g.vertex_count();
  if (algo == "fr") return layout_fruchterman_reingold(g, p);

  auto components = connected_components(g);
  if (components.size() <= 1) {
    if (algo == "kk" || n < 100) return layout_kamada_kawai(g, p);
    return layout_fruchterman_reingold(g, p);
  }

  // Solve each component on its own, then pack the unit-frame solutions into a
  // near-square grid, larger components first.
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return components[a].size() > components[b].size();
  });

  Layout l;
  l.algorithm = std::string(algo);
  l.ideal_edge_length = p.ideal_edge_length;
  l.x.assign(n, 0.0);
  l.y.assign(n, 0.0);
  const std::size_t cols =
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(components.size()))));
  const std::size_t rows = (components.size() + cols - 1) / cols;
  const double cw = 1.0 / static_cast<double>(cols), ch = 1.0 / static_cast<double>(rows);
  for (std::size_t slot = 0; slot < order.size(); ++slot) {
    const auto& comp = components[order[slot]];
    SimilarityGraph sub = extract_subgraph(g, comp);
    LayoutParams sp = p;
    sp.seed = p.seed + slot;
    Layout sl;
    if (algo == "kk" || comp.size() < 100)
      sl = layout_kamada_kawai(sub, sp);
    else
      sl = layout_fruchterman_reingold(sub, sp);
    const double x0 = static_cast<double>(slot % cols) * cw;
    const double y0 = static_cast<double>(slot / cols) * ch;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      l.x[comp[i]] = x0 + (0.05 + 0.9 * sl.x[i]) * cw;
      l.y[comp[i]] = y0 + (0.05 + 0.9 * sl.y[i]) * ch;
    }
    l.iterations_used += sl.iterations_used;
  }
  return l;
}

std::string layout_to_json(const Layout& l, const std::vector<std::string>& labels) {
  if (labels.size() != l.x.size()) throw InputError("label count does not match layout");
  nlohmann::ordered_json j;
  j["format"] = "scimap-layout/1";
  j["algorithm"] = l.algorithm;
  j["ideal_edge_length"] = l.ideal_edge_length;
  if (l.initial_stress) j["initial_stress"] = *l.initial_stress;
  if (l.final_stress) j["final_stress"] = *l.final_stress;
  j["iterations_used"] = l.iterations_used;
  auto points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    points.push_back({{"label", labels[i]}, {"x", l.x[i]}, {"y", l.y[i]}});
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

Layout layout_from_json(const std::string& text, std::vector<std::string>* labels) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("layout JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "scimap-layout/1")
    throw InputError("layout JSON: missing format tag scimap-layout/1");
  Layout l;
  l.algorithm = j.value("algorithm", "");
  l.ideal_edge_length = j.value("ideal_edge_length", 0.0);
  if (j.contains("initial_stress")) l.initial_stress = j["initial_stress"].get<double>();
  if (j.contains("final_stress")) l.final_stress = j["final_stress"].get<double>();
  l.iterations_used = j.value("iterations_used", std::size_t{0});
  if (labels) labels->clear();
  for (const auto& pt : j.at("points")) {
    l.x.push_back(pt.at("x").get<double>());
    l.y.push_back(pt.at("y").get<double>());
    if (labels) labels->push_back(pt.at("label").get<std::string>());
  }
  return l;
}

}  // namespace scimap
