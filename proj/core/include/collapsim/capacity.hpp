#pragma once

#include <cstddef>
#include <cstdint>

namespace collapsim {

/// Size limits for the exponentially large objects this library builds.
/// The defaults are desk-scale; COLLAPSIM_MAX_DIM shifts the Hilbert-space
/// bounds (max_hilbert_dim and the matching spin count) at process level.
struct Capacity {
  std::size_t max_hilbert_dim = std::size_t{1} << 26;
  int max_quantum_spins = 26;     // diagonal lift: dim = 2^N
  int max_bruteforce_spins = 30;  // exhaustive enumeration: 2^N configurations
  std::size_t max_dense_dim = std::size_t{1} << 12;  // dense diagonalization

  /// Defaults, with COLLAPSIM_MAX_DIM applied when set to a positive integer.
  static Capacity from_env();
};

}  // namespace collapsim
