#pragma once

#include <cstdint>
#include <random>

namespace girthlift {

// std::mt19937_64 output is fixed by the standard; the distributions are not,
// so bounded draws go through this helper to keep seeded runs reproducible
// across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Rejection sampling over the top multiple of `bound`.
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace girthlift
