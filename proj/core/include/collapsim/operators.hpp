#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "collapsim/state_vector.hpp"

namespace collapsim::hilbert {

/// Dense Hermitian operator (energy units). Hermiticity is validated at
/// construction, so holding a value implies entries[j][k] == conj(entries[k][j])
/// within the construction tolerance.
class HermitianOperator {
public:
  /// Throws InvalidInputError if `m` is not square, empty, or deviates from
  /// Hermitian symmetry by more than `tol` in any entry.
  static HermitianOperator from_matrix(Eigen::MatrixXcd m, double tol = 1e-12);

  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

  double frobenius_norm() const { return mat_.norm(); }

  /// H|ψ⟩.
  StateVector apply(const StateVector& psi) const;

private:
  explicit HermitianOperator(Eigen::MatrixXcd m) : mat_(std::move(m)) {}
  Eigen::MatrixXcd mat_;
};

/// Operator diagonal in the computational basis; stores only the energies.
class DiagonalOperator {
public:
  static DiagonalOperator from_energies(std::vector<double> energies);

  std::size_t dim() const { return energies_.size(); }
  const std::vector<double>& energies() const { return energies_; }

  /// Dense embedding with the energies on the diagonal.
  HermitianOperator to_dense() const;

  StateVector apply(const StateVector& psi) const;

private:
  explicit DiagonalOperator(std::vector<double> energies) : energies_(std::move(energies)) {}
  std::vector<double> energies_;
};

/// Parameters of the propagator exp(-i·tau·H/hbar).
struct PropagatorSpec {
  double tau = 0.0;
  double hbar = 1.0;

  /// hbar > 0, tau finite and >= 0.
  void validate() const;
};

}  // namespace collapsim::hilbert
