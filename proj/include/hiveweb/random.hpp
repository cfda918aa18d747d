#pragma once

#include <cstdint>
#include <random>

namespace hiveweb {

/// Uniform integer in [lo, hi] by rejection; reproducible across standard
/// library implementations, unlike std::uniform_int_distribution.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % range);
}

}  // namespace hiveweb
