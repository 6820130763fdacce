#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "collapsim/errors.hpp"
#include "collapsim/state_vector.hpp"

using collapsim::CapacityError;
using collapsim::InvalidInputError;
using collapsim::hilbert::Complex;
using collapsim::hilbert::StateVector;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector plus_state() {
  return StateVector{{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}}};
}
}  // namespace

TEST_CASE("inner_product on basis states") {
  const auto e0 = StateVector::basis(2, 0);
  const auto e1 = StateVector::basis(2, 1);
  CHECK(inner_product(e0, e0) == Complex{1.0, 0.0});
  CHECK(inner_product(e0, e1) == Complex{0.0, 0.0});
  CHECK(inner_product(plus_state(), e0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("inner_product is conjugate-symmetric") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    StateVector a, b;
    for (int j = 0; j < 5; ++j) {
      a.amplitudes.emplace_back(u(gen), u(gen));
      b.amplitudes.emplace_back(u(gen), u(gen));
    }
    const Complex ab = inner_product(a, b);
    const Complex ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
  }
}

TEST_CASE("inner_product rejects mismatched dims") {
  CHECK_THROWS_AS(inner_product(StateVector::basis(2, 0), StateVector::basis(3, 0)),
                  InvalidInputError);
}

TEST_CASE("fidelity examples") {
  const auto e0 = StateVector::basis(2, 0);
  const auto e1 = StateVector::basis(2, 1);
  CHECK(fidelity(e0, e0) == 1.0);  // self-overlap is exact
  CHECK(fidelity(plus_state(), plus_state()) == 1.0);
  CHECK(fidelity(e0, e1) == 0.0);
  CHECK(fidelity(plus_state(), e0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity is symmetric and bounded") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    StateVector a, b;
    for (int j = 0; j < 6; ++j) {
      a.amplitudes.emplace_back(u(gen), u(gen));
      b.amplitudes.emplace_back(u(gen), u(gen));
    }
    a = a.normalized();
    b = b.normalized();
    const double f_ab = fidelity(a, b);
    const double f_ba = fidelity(b, a);
    CHECK(std::abs(f_ab - f_ba) <= 1e-12);
    CHECK(f_ab >= 0.0);
    CHECK(f_ab <= 1.0 + 1e-12);
  }
}

TEST_CASE("fidelity rejects unnormalized input") {
  StateVector big{{Complex{2.0, 0.0}, Complex{0.0, 0.0}}};
  CHECK_THROWS_AS(fidelity(big, StateVector::basis(2, 0)), InvalidInputError);
  CHECK_THROWS_AS(fidelity(StateVector::basis(2, 0), big), InvalidInputError);
}

TEST_CASE("tensor_product index map") {
  const auto e0 = StateVector::basis(2, 0);
  const auto e1 = StateVector::basis(2, 1);

  const auto e00 = tensor_product(e0, e0);
  CHECK(e00.dim() == 4);
  CHECK(e00.amplitudes[0] == Complex{1.0, 0.0});

  // (1/sqrt2)(e0+e1) x e1 = (1/sqrt2)(e1 + e3), by expanding j*dim(b)+k
  const auto mixed = tensor_product(plus_state(), e1);
  CHECK(mixed.dim() == 4);
  CHECK(mixed.amplitudes[0] == Complex{0.0, 0.0});
  CHECK(mixed.amplitudes[1].real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
  CHECK(mixed.amplitudes[2] == Complex{0.0, 0.0});
  CHECK(mixed.amplitudes[3].real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("tensor_product dimension law and norm multiplicativity") {
  std::mt19937_64 gen(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    StateVector a, b;
    const int na = 1 + static_cast<int>(gen() % 5);
    const int nb = 1 + static_cast<int>(gen() % 5);
    for (int j = 0; j < na; ++j) a.amplitudes.emplace_back(u(gen), u(gen));
    for (int j = 0; j < nb; ++j) b.amplitudes.emplace_back(u(gen), u(gen));
    a = a.normalized();
    b = b.normalized();
    const auto t = tensor_product(a, b);
    CHECK(t.dim() == a.dim() * b.dim());
    CHECK(t.is_normalized());
  }
}

TEST_CASE("tensor_product enforces the dimension cap") {
  collapsim::Capacity tiny;
  tiny.max_hilbert_dim = 8;
  const auto a = StateVector::basis(4, 0);
  const auto b = StateVector::basis(4, 0);
  CHECK_THROWS_AS(tensor_product(a, b, tiny), CapacityError);
  CHECK_NOTHROW(tensor_product(a, StateVector::basis(2, 0), tiny));
}

TEST_CASE("state vectors must be nonempty") {
  CHECK_THROWS_AS(StateVector::from_amplitudes({}), InvalidInputError);
  CHECK_THROWS_AS(StateVector::basis(0, 0), InvalidInputError);
}
