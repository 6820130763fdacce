#pragma once

#include <optional>
#include <vector>

#include "collapsim/capacity.hpp"
#include "collapsim/operators.hpp"
#include "collapsim/state_vector.hpp"

namespace collapsim::solver {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::optional<std::vector<hilbert::StateVector>> eigenvectors;
};

/// Full dense spectrum via Hermitian eigendecomposition (dim <= max_dense_dim).
SpectrumResult exact_spectrum(const hilbert::HermitianOperator& h, bool with_vectors = true,
                              const Capacity& capacity = {});

/// Diagonal operators are already solved: sorted energies and permuted basis
/// states, exact.
SpectrumResult exact_spectrum(const hilbert::DiagonalOperator& h, bool with_vectors = true,
                              const Capacity& capacity = {});

/// ‖Hψ - Eψ‖₂.
double eigenpair_residual(const hilbert::HermitianOperator& h, const hilbert::StateVector& psi,
                          double energy);
double eigenpair_residual(const hilbert::DiagonalOperator& h, const hilbert::StateVector& psi,
                          double energy);

/// Residual check ‖Hψ - Eψ‖ <= tol·max(1, |E|): one matrix-vector product,
/// polynomial in the state dimension.
bool verify_eigenpair(const hilbert::HermitianOperator& h, const hilbert::StateVector& psi,
                      double energy, double tol);
bool verify_eigenpair(const hilbert::DiagonalOperator& h, const hilbert::StateVector& psi,
                      double energy, double tol);

struct TrajectorySample {
  double t = 0.0;
  hilbert::StateVector state;
};

/// Forward-difference residual check of a sampled Schrödinger trajectory:
/// for each consecutive pair, i·hbar·(ψ(t+step) - ψ(t))/step must match
/// Hψ(t) within tol in max-norm. Samples must be `step` apart and strictly
/// increasing in time; fewer than 2 samples is an error.
bool verify_time_evolution(const hilbert::HermitianOperator& h,
                           const std::vector<TrajectorySample>& trajectory, double step,
                           double tol, double hbar = 1.0);

}  // namespace collapsim::solver
