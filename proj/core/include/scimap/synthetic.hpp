#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scimap/citation_matrix.hpp"
#include "scimap/types.hpp"

namespace scimap {

// Planted-block citation matrix. Block b gets journals "B<b+1>J1.."; bridge
// journals "X1.." and fifteen cited-only background journals "R1.." follow.
//
// Within a block every journal cites every other member near intra_rate;
// across blocks at inter_rate (0 = none). Bridge journal k cites all members
// of blocks k%B and (k+1)%B near 0.6*intra_rate. Every citing journal also
// cites the background columns on a shared three-level profile around
// 0.9*intra_rate, which correlates a bridge with the members of both of its
// blocks while cross-block pairs stay well below them. Background journals
// cite nothing, so their rows have no variance. All counts are jittered
// +-10% deterministically from the seed.
//
// Two bridges assigned the same pair of blocks join them 2-connectedly and
// merge their components; distinct pairs (bridges <= blocks) keep each bridge
// an articulation point.
struct SyntheticSpec {
  std::vector<std::size_t> blocks;
  double intra_rate = 50.0;
  double inter_rate = 0.0;
  std::size_t bridge_journals = 0;
  std::uint64_t seed = 1;
};

inline constexpr std::size_t kSyntheticBackgroundJournals = 15;

CitationMatrix generate_synthetic(const SyntheticSpec& spec);

}  // namespace scimap
