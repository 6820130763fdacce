#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <random>

#include "collapsim/evolution.hpp"

using namespace collapsim::hilbert;

namespace {

HermitianOperator random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = Complex(u(gen), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex v(u(gen), u(gen));
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return HermitianOperator::from_matrix(m);
}

StateVector random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  StateVector psi;
  for (std::size_t j = 0; j < n; ++j) psi.amplitudes.emplace_back(u(gen), u(gen));
  return psi.normalized();
}

}  // namespace

static void BM_EvolveDense(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto h = random_hermitian(n, 1);
  const auto psi = random_state(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(psi, h, PropagatorSpec{0.7, 1.0}));
  }
}
BENCHMARK(BM_EvolveDense)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_EvolveDiagonal(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> energies(n);
  for (std::size_t j = 0; j < n; ++j) energies[j] = 0.01 * static_cast<double>(j);
  const auto diag = DiagonalOperator::from_energies(std::move(energies));
  const auto psi = random_state(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(psi, diag, PropagatorSpec{0.7, 1.0}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveDiagonal)->Arg(1 << 10)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
