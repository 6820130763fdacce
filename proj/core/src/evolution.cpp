#include "collapsim/evolution.hpp"

#include <Eigen/Eigenvalues>
#include <complex>

#include "collapsim/errors.hpp"

namespace collapsim::hilbert {

StateVector evolve(const StateVector& psi, const HermitianOperator& h,
                   const PropagatorSpec& prop) {
  prop.validate();
  if (psi.dim() != h.dim()) throw InvalidInputError("evolve: dimension mismatch");
  if (prop.tau == 0.0) return psi;  // identity propagator, bit-exact

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvalidInputError("evolve: eigendecomposition failed");
  }
  const Eigen::VectorXd& energies = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  Eigen::Map<const Eigen::VectorXcd> in(psi.amplitudes.data(),
                                        static_cast<Eigen::Index>(psi.dim()));
  Eigen::VectorXcd modal = vectors.adjoint() * in;
  for (Eigen::Index j = 0; j < modal.size(); ++j) {
    const double phase = -energies(j) * prop.tau / prop.hbar;
    modal(j) *= std::complex<double>(std::cos(phase), std::sin(phase));
  }

  StateVector out;
  out.amplitudes.resize(psi.dim());
  Eigen::Map<Eigen::VectorXcd> result(out.amplitudes.data(),
                                      static_cast<Eigen::Index>(psi.dim()));
  result = vectors * modal;
  return out;
}

StateVector evolve(const StateVector& psi, const DiagonalOperator& h,
                   const PropagatorSpec& prop) {
  prop.validate();
  if (psi.dim() != h.dim()) throw InvalidInputError("evolve: dimension mismatch");
  if (prop.tau == 0.0) return psi;

  StateVector out = psi;
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    const double phase = -h.energies()[j] * prop.tau / prop.hbar;
    out.amplitudes[j] *= std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return out;
}

}  // namespace collapsim::hilbert
