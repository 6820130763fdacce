#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "collapsim/capacity.hpp"

namespace collapsim::hilbert {

using Complex = std::complex<double>;

/// Finite-dimensional complex state vector, amplitudes indexed by basis state.
/// Value type; every operation on it is a pure function.
struct StateVector {
  std::vector<Complex> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }

  /// Sum of squared moduli, pairwise-summed.
  double norm_sq() const;
  double norm() const;
  bool is_normalized(double tol = 1e-10) const;
  StateVector normalized() const;

  static StateVector basis(std::size_t dim, std::size_t index);
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);
};

/// ⟨a|b⟩ = Σ_j conj(a_j)·b_j.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |⟨a|b⟩|² / (⟨a|a⟩⟨b|b⟩) for normalized inputs. Dividing by the stored
/// norms keeps self-fidelity at exactly 1 regardless of representation-level
/// rounding in the amplitudes; both inputs must already be normalized
/// within 1e-10.
double fidelity(const StateVector& a, const StateVector& b);

/// Kronecker product: amplitude (j·b.dim + k) = a_j·b_k.
StateVector tensor_product(const StateVector& a, const StateVector& b,
                           const Capacity& capacity = {});

}  // namespace collapsim::hilbert
