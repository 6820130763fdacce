#include <benchmark/benchmark.h>

#include "collapsim/ground_state.hpp"
#include "collapsim/scaling.hpp"

using collapsim::solver::brute_force_ground_state;
using collapsim::solver::BruteForceOptions;
using collapsim::solver::random_integer_model;

static void BM_BruteForceGroundState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = random_integer_model(n, 2026);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_ground_state(model));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_BruteForceGroundState)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

// Worst case for witness bookkeeping: every configuration ties at zero.
static void BM_BruteForceDegenerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  collapsim::ising::IsingModel model;
  model.num_spins = n;
  model.fields.assign(static_cast<std::size_t>(n), 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_ground_state(model));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_BruteForceDegenerate)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_ClassicalEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = random_integer_model(n, 7);
  const auto config = collapsim::ising::SpinConfiguration::from_bits(0x5a5a5a5a & ((1u << n) - 1), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(collapsim::ising::classical_energy(model, config));
  }
}
BENCHMARK(BM_ClassicalEnergy)->Arg(16)->Arg(24);
