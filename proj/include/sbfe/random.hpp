#pragma once

#include <cstdint>
#include <random>

namespace sbfe {

// Uniform helpers built directly on mt19937_64 output. The standard
// <random> distributions are implementation-defined, so using them would
// break byte-identical reruns across standard libraries; these mappings
// depend only on the engine's fixed output sequence.

// Uniform double in [0, 1): top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection (bound > 0).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace sbfe
