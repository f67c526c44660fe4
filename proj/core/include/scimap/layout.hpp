#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scimap/graph.hpp"
#include "scimap/types.hpp"

namespace scimap {

struct LayoutParams {
  std::size_t max_iterations = 500;
  double ideal_edge_length = 1.0;  // KK: target length per hop; FR: the C factor in k = C*sqrt(area/n)
  double initial_temperature = 0.1;
  double cooling_factor = 0.95;
  double convergence_epsilon = 1e-7;
  std::uint64_t seed = 1;
};

struct Layout {
  std::vector<double> x;
  std::vector<double> y;
  std::string algorithm;
  double ideal_edge_length = 0.0;  // effective value after fitting to the frame
  std::optional<double> final_stress;
  std::optional<double> initial_stress;
  std::size_t iterations_used = 0;
};

// Per-iteration record of the force simulation, for inspection.
struct FrStepTrace {
  std::vector<double> temperatures;
  std::vector<double> max_displacements;
};

// Deterministic pseudo-random positions in [0,1]^2.
void seeded_positions(std::size_t n, std::uint64_t seed, std::vector<double>& x,
                      std::vector<double>& y);

// Stress minimization over graph-theoretic hop distances: repeatedly applies a
// damped Newton step to the vertex with the largest gradient. The result is
// fitted into [0,1]^2; ideal_edge_length and both stress fields are rescaled
// consistently, so stress(g, result) == *result.final_stress.
Layout layout_kamada_kawai(const SimilarityGraph& g, const LayoutParams& p);

// Force simulation: k^2/d repulsion between all pairs, d^2/k attraction along
// edges, displacement capped by a geometrically cooling temperature, positions
// clamped to [0,1]^2. Exact all-pairs repulsion up to 2000 vertices, grid
// buckets beyond.
Layout layout_fruchterman_reingold(const SimilarityGraph& g, const LayoutParams& p,
                                   FrStepTrace* trace = nullptr);

// Weighted sum over vertex pairs of (euclidean - ideal distance)^2 / hops^2,
// with ideal distance = l.ideal_edge_length * hops.
double stress(const SimilarityGraph& g, const Layout& l);

// algo: "kk", "fr", or "auto" (per component: KK under 100 vertices, FR from
// 100 up). "fr" runs one global simulation; otherwise disconnected graphs are
// solved per component and packed on a grid.
Layout layout_graph(const SimilarityGraph& g, const LayoutParams& p, std::string_view algo = "auto");

std::string layout_to_json(const Layout& l, const std::vector<std::string>& labels);
Layout layout_from_json(const std::string& text, std::vector<std::string>* labels = nullptr);

}  // namespace scimap
