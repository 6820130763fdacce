#pragma once

#include <cstdint>

namespace collapsim::rng {

/// splitmix64 finalizer: full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based word: a pure function of (seed, counter words). Identical on
/// every platform and independent of evaluation order, which is what makes
/// parallel sampling reproducible.
inline std::uint64_t counter_word(std::uint64_t seed, std::uint64_t c0, std::uint64_t c1) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ c0);
  h = mix64(h ^ c1);
  return h;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::uint64_t seed, std::uint64_t c0, std::uint64_t c1) {
  return static_cast<double>(counter_word(seed, c0, c1) >> 11) * 0x1.0p-53;
}

/// Uniform double in [-half_width, +half_width]; |result| <= half_width holds
/// exactly because every rounding step is monotone.
inline double uniform_symmetric(std::uint64_t seed, std::uint64_t c0, std::uint64_t c1,
                                double half_width) {
  return half_width * (2.0 * uniform_unit(seed, c0, c1) - 1.0);
}

}  // namespace collapsim::rng
