#include "scimap/synthetic.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "scimap/rng.hpp"

namespace scimap {
namespace {

struct Role {
  enum Kind { member, bridge, background } kind = member;
  std::size_t block = 0;   // member: own block; bridge: first assigned block
  std::size_t block2 = 0;  // bridge only
};

std::uint64_t jittered(double rate, SplitMix64& rng) {
  double v = rate * rng.next_double(0.9, 1.1);
  auto n = static_cast<std::int64_t>(std::llround(v));
  return n < 1 ? 1u : static_cast<std::uint64_t>(n);
}

}  // namespace

CitationMatrix generate_synthetic(const SyntheticSpec& spec) {
  if (spec.blocks.empty()) throw InputError("synthetic spec needs at least one block");
  for (std::size_t s : spec.blocks) {
    if (s < 3) throw InputError("synthetic blocks need at least 3 journals each");
  }
  if (spec.intra_rate <= 0) throw InputError("intra_rate must be positive");
  if (spec.inter_rate < 0) throw InputError("inter_rate must be non-negative");
  if (spec.bridge_journals > 0 && spec.blocks.size() < 2) {
    throw InputError("bridge journals need at least two blocks");
  }

  const std::size_t nblocks = spec.blocks.size();
  const double bridge_rate = 0.6 * spec.intra_rate;
  const double background_rate = 0.9 * spec.intra_rate;

  CitationMatrix m;
  std::vector<Role> roles;
  for (std::size_t b = 0; b < nblocks; ++b) {
    for (std::size_t k = 0; k < spec.blocks[b]; ++k) {
      m.add_journal("B" + std::to_string(b + 1) + "J" + std::to_string(k + 1));
      roles.push_back({Role::member, b, 0});
    }
  }
  for (std::size_t k = 0; k < spec.bridge_journals; ++k) {
    m.add_journal("X" + std::to_string(k + 1));
    roles.push_back({Role::bridge, k % nblocks, (k + 1) % nblocks});
  }
  const std::size_t background_base = roles.size();
  for (std::size_t r = 0; r < kSyntheticBackgroundJournals; ++r) {
    m.add_journal("R" + std::to_string(r + 1));
    roles.push_back({Role::background, 0, 0});
  }
  const std::size_t n = roles.size();

  SplitMix64 rng(spec.seed);
  for (std::size_t i = 0; i < n; ++i) {
    const Role& src = roles[i];
    if (src.kind == Role::background) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Role& dst = roles[j];
      double rate = 0.0;
      if (dst.kind == Role::background) {
        std::size_t pop = 1 + (j - background_base) % 3;
        rate = background_rate * static_cast<double>(pop);
      } else if (dst.kind == Role::member) {
        if (src.kind == Role::member) {
          rate = dst.block == src.block ? spec.intra_rate : spec.inter_rate;
        } else {
          bool assigned = dst.block == src.block || dst.block == src.block2;
          rate = assigned ? bridge_rate : spec.inter_rate;
        }
      }
      if (rate > 0) {
        m.add_entry(static_cast<VertexId>(i), static_cast<VertexId>(j), jittered(rate, rng));
      }
    }
  }
  m.finalize();
  return m;
}

}  // namespace scimap
