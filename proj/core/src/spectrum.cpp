#include "collapsim/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "collapsim/errors.hpp"

namespace collapsim::solver {

SpectrumResult exact_spectrum(const hilbert::HermitianOperator& h, bool with_vectors,
                              const Capacity& capacity) {
  if (h.dim() > capacity.max_dense_dim) {
    throw CapacityError("exact_spectrum: dim " + std::to_string(h.dim()) +
                        " exceeds dense limit " + std::to_string(capacity.max_dense_dim));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h.matrix(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvalidInputError("exact_spectrum: eigendecomposition failed");
  }

  SpectrumResult result;
  result.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
  if (with_vectors) {
    std::vector<hilbert::StateVector> vectors;
    vectors.reserve(h.dim());
    for (std::size_t j = 0; j < h.dim(); ++j) {
      hilbert::StateVector v;
      v.amplitudes.resize(h.dim());
      for (std::size_t i = 0; i < h.dim(); ++i) {
        v.amplitudes[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                static_cast<Eigen::Index>(j));
      }
      vectors.push_back(std::move(v));
    }
    result.eigenvectors = std::move(vectors);
  }
  return result;
}

SpectrumResult exact_spectrum(const hilbert::DiagonalOperator& h, bool with_vectors,
                              const Capacity& capacity) {
  if (h.dim() > capacity.max_hilbert_dim) {
    throw CapacityError("exact_spectrum: dim exceeds max Hilbert dimension");
  }
  std::vector<std::size_t> order(h.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.energies()[a] < h.energies()[b];
  });

  SpectrumResult result;
  result.eigenvalues.reserve(h.dim());
  for (std::size_t idx : order) result.eigenvalues.push_back(h.energies()[idx]);
  if (with_vectors) {
    std::vector<hilbert::StateVector> vectors;
    vectors.reserve(h.dim());
    for (std::size_t idx : order) {
      vectors.push_back(hilbert::StateVector::basis(h.dim(), idx));
    }
    result.eigenvectors = std::move(vectors);
  }
  return result;
}

namespace {

double residual_norm(const hilbert::StateVector& h_psi, const hilbert::StateVector& psi,
                     double energy) {
  double sum = 0.0;
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    sum += std::norm(h_psi.amplitudes[j] - energy * psi.amplitudes[j]);
  }
  return std::sqrt(sum);
}

}  // namespace

double eigenpair_residual(const hilbert::HermitianOperator& h, const hilbert::StateVector& psi,
                          double energy) {
  return residual_norm(h.apply(psi), psi, energy);
}

double eigenpair_residual(const hilbert::DiagonalOperator& h, const hilbert::StateVector& psi,
                          double energy) {
  return residual_norm(h.apply(psi), psi, energy);
}

bool verify_eigenpair(const hilbert::HermitianOperator& h, const hilbert::StateVector& psi,
                      double energy, double tol) {
  return eigenpair_residual(h, psi, energy) <= tol * std::max(1.0, std::abs(energy));
}

bool verify_eigenpair(const hilbert::DiagonalOperator& h, const hilbert::StateVector& psi,
                      double energy, double tol) {
  return eigenpair_residual(h, psi, energy) <= tol * std::max(1.0, std::abs(energy));
}

bool verify_time_evolution(const hilbert::HermitianOperator& h,
                           const std::vector<TrajectorySample>& trajectory, double step,
                           double tol, double hbar) {
  if (trajectory.size() < 2) {
    throw InvalidInputError("verify_time_evolution: need at least 2 samples");
  }
  if (!(step > 0.0)) throw InvalidInputError("verify_time_evolution: step must be > 0");
  if (!(hbar > 0.0)) throw InvalidInputError("verify_time_evolution: hbar must be > 0");

  for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
    const double dt = trajectory[i + 1].t - trajectory[i].t;
    if (!(dt > 0.0)) {
      throw InvalidInputError("verify_time_evolution: times must be strictly increasing");
    }
    if (std::abs(dt - step) > 1e-12 * std::max(1.0, step)) {
      throw InvalidInputError("verify_time_evolution: sample spacing does not match step");
    }
  }

  const std::complex<double> i_hbar{0.0, hbar};
  for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
    const hilbert::StateVector& psi = trajectory[i].state;
    const hilbert::StateVector& next = trajectory[i + 1].state;
    if (psi.dim() != h.dim() || next.dim() != h.dim()) {
      throw InvalidInputError("verify_time_evolution: dimension mismatch");
    }
    const hilbert::StateVector h_psi = h.apply(psi);
    double max_err = 0.0;
    for (std::size_t j = 0; j < psi.dim(); ++j) {
      const std::complex<double> quotient =
          i_hbar * (next.amplitudes[j] - psi.amplitudes[j]) / step;
      max_err = std::max(max_err, std::abs(quotient - h_psi.amplitudes[j]));
    }
    if (max_err > tol) return false;
  }
  return true;
}

}  // namespace collapsim::solver
