#include "collapsim/state_vector.hpp"

#include <cmath>
#include <span>
#include <string>

#include "collapsim/errors.hpp"
#include "collapsim/pairwise_sum.hpp"

namespace collapsim::hilbert {

namespace {

void require_nonempty(const StateVector& v, const char* who) {
  if (v.dim() == 0) {
    throw InvalidInputError(std::string(who) + ": state vector must have dim >= 1");
  }
}

void require_same_dim(const StateVector& a, const StateVector& b, const char* who) {
  if (a.dim() != b.dim()) {
    throw InvalidInputError(std::string(who) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

double StateVector::norm_sq() const {
  std::vector<double> sq(amplitudes.size());
  for (std::size_t j = 0; j < amplitudes.size(); ++j) sq[j] = std::norm(amplitudes[j]);
  return pairwise_sum(std::span<const double>(sq));
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  require_nonempty(*this, "normalized");
  const double n = norm();
  if (n == 0.0) throw InvalidInputError("normalized: zero vector");
  StateVector out = *this;
  for (auto& c : out.amplitudes) c /= n;
  return out;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (dim == 0) throw InvalidInputError("basis: dim must be >= 1");
  if (index >= dim) throw InvalidInputError("basis: index out of range");
  StateVector v;
  v.amplitudes.assign(dim, Complex{0.0, 0.0});
  v.amplitudes[index] = Complex{1.0, 0.0};
  return v;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) throw InvalidInputError("from_amplitudes: dim must be >= 1");
  return StateVector{std::move(amplitudes)};
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_nonempty(a, "inner_product");
  require_same_dim(a, b, "inner_product");
  std::vector<Complex> terms(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    terms[j] = std::conj(a.amplitudes[j]) * b.amplitudes[j];
  }
  return pairwise_sum(std::span<const Complex>(terms));
}

double fidelity(const StateVector& a, const StateVector& b) {
  require_nonempty(a, "fidelity");
  require_same_dim(a, b, "fidelity");
  if (!a.is_normalized() || !b.is_normalized()) {
    throw InvalidInputError("fidelity: inputs must be normalized within 1e-10");
  }
  const double overlap = std::norm(inner_product(a, b));
  return overlap / (a.norm_sq() * b.norm_sq());
}

StateVector tensor_product(const StateVector& a, const StateVector& b,
                           const Capacity& capacity) {
  require_nonempty(a, "tensor_product");
  require_nonempty(b, "tensor_product");
  if (a.dim() > capacity.max_hilbert_dim / b.dim()) {
    throw CapacityError("tensor_product: result dimension " + std::to_string(a.dim()) +
                        "*" + std::to_string(b.dim()) + " exceeds max " +
                        std::to_string(capacity.max_hilbert_dim));
  }
  StateVector out;
  out.amplitudes.resize(a.dim() * b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t k = 0; k < b.dim(); ++k) {
      out.amplitudes[j * b.dim() + k] = a.amplitudes[j] * b.amplitudes[k];
    }
  }
  return out;
}

}  // namespace collapsim::hilbert
