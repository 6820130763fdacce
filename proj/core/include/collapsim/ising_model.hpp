#pragma once

#include <cstdint>
#include <vector>

#include "collapsim/capacity.hpp"
#include "collapsim/operators.hpp"

namespace collapsim::ising {

/// One pairwise coupling J_jk, stored with j < k.
struct Coupling {
  int j = 0;
  int k = 0;
  double strength = 0.0;
};

/// Classical spin-glass energy function over ±1 spins:
///   E(σ) = -Σ_{j<k} J_jk σ_j σ_k - μ Σ_j h_j σ_j + offset.
struct IsingModel {
  int num_spins = 0;
  std::vector<Coupling> couplings;  // sparse, (j,k) pairs distinct
  std::vector<double> fields;       // length num_spins
  double moment = 1.0;              // μ, folded into the field term at evaluation
  double offset = 0.0;

  /// Throws InvalidInputError on out-of-range indices, duplicate pairs,
  /// wrong field length, or non-finite values.
  void validate() const;
};

/// Spin assignment with entries in {-1, +1}.
struct SpinConfiguration {
  std::vector<int> spins;

  int size() const { return static_cast<int>(spins.size()); }

  /// Decode a basis index: bit 0 -> σ=+1, bit 1 -> σ=-1, most-significant
  /// bit of the n-bit word is spin 0.
  static SpinConfiguration from_bits(std::uint64_t bits, int num_spins);
  std::uint64_t to_bits() const;

  /// Throws if any entry is not exactly -1 or +1.
  void validate() const;

  bool operator==(const SpinConfiguration&) const = default;
};

/// E(σ) per the model definition, including the offset.
double classical_energy(const IsingModel& model, const SpinConfiguration& config);

/// Lift to the 2^N-dimensional diagonal quantum Hamiltonian: basis index b
/// carries exactly classical_energy(model, SpinConfiguration::from_bits(b, N)).
hilbert::DiagonalOperator build_quantum_diagonal(const IsingModel& model,
                                                 const Capacity& capacity = {});

}  // namespace collapsim::ising
