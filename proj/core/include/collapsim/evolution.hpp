#pragma once

#include "collapsim/operators.hpp"
#include "collapsim/state_vector.hpp"

namespace collapsim::hilbert {

/// exp(-i·tau·H/hbar)|ψ⟩ via Hermitian eigendecomposition. Unitary up to
/// diagonalization tolerance; norm is preserved within 1e-10.
StateVector evolve(const StateVector& psi, const HermitianOperator& h,
                   const PropagatorSpec& prop);

/// Diagonal fast path: amplitude j picks up the phase exp(-i·tau·E_j/hbar).
StateVector evolve(const StateVector& psi, const DiagonalOperator& h,
                   const PropagatorSpec& prop);

}  // namespace collapsim::hilbert
