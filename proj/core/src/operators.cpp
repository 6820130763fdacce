#include "collapsim/operators.hpp"

#include <cmath>
#include <string>

#include "collapsim/errors.hpp"

namespace collapsim::hilbert {

HermitianOperator HermitianOperator::from_matrix(Eigen::MatrixXcd m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidInputError("HermitianOperator: matrix must be square with dim >= 1");
  }
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    if (m(j, j).imag() != 0.0 && std::abs(m(j, j).imag()) > tol) {
      throw InvalidInputError("HermitianOperator: diagonal entry (" + std::to_string(j) +
                              ") has imaginary part beyond tolerance");
    }
    for (Eigen::Index k = j + 1; k < m.cols(); ++k) {
      if (std::abs(m(j, k) - std::conj(m(k, j))) > tol) {
        throw InvalidInputError("HermitianOperator: entry (" + std::to_string(j) + "," +
                                std::to_string(k) + ") breaks Hermitian symmetry");
      }
    }
  }
  return HermitianOperator(std::move(m));
}

StateVector HermitianOperator::apply(const StateVector& psi) const {
  if (psi.dim() != dim()) {
    throw InvalidInputError("HermitianOperator::apply: dimension mismatch");
  }
  Eigen::Map<const Eigen::VectorXcd> in(psi.amplitudes.data(),
                                        static_cast<Eigen::Index>(psi.dim()));
  StateVector out;
  out.amplitudes.resize(psi.dim());
  Eigen::Map<Eigen::VectorXcd> result(out.amplitudes.data(),
                                      static_cast<Eigen::Index>(psi.dim()));
  result = mat_ * in;
  return out;
}

DiagonalOperator DiagonalOperator::from_energies(std::vector<double> energies) {
  if (energies.empty()) {
    throw InvalidInputError("DiagonalOperator: dim must be >= 1");
  }
  for (double e : energies) {
    if (!std::isfinite(e)) throw InvalidInputError("DiagonalOperator: energies must be finite");
  }
  return DiagonalOperator(std::move(energies));
}

HermitianOperator DiagonalOperator::to_dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim()),
                                              static_cast<Eigen::Index>(dim()));
  for (std::size_t j = 0; j < dim(); ++j) {
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = energies_[j];
  }
  return HermitianOperator::from_matrix(std::move(m));
}

StateVector DiagonalOperator::apply(const StateVector& psi) const {
  if (psi.dim() != dim()) {
    throw InvalidInputError("DiagonalOperator::apply: dimension mismatch");
  }
  StateVector out = psi;
  for (std::size_t j = 0; j < dim(); ++j) out.amplitudes[j] *= energies_[j];
  return out;
}

void PropagatorSpec::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw InvalidInputError("PropagatorSpec: hbar must be positive and finite");
  }
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidInputError("PropagatorSpec: tau must be finite and >= 0");
  }
}

}  // namespace collapsim::hilbert
