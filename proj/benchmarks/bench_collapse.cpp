#include <benchmark/benchmark.h>

#include "collapsim/collapse.hpp"

using namespace collapsim::collapse;

namespace {

EnvironmentSpec spec_for(std::size_t n) {
  EnvironmentSpec spec;
  for (std::size_t j = 0; j < n; ++j) spec.estimates.push_back(100.0 * (j + 1));
  spec.tau = 1.0;
  spec.hbar = 1.0;
  spec.sampling_seed = 99;
  return spec;
}

}  // namespace

static void BM_SampleEnvironment(benchmark::State& state) {
  const auto spec = spec_for(static_cast<std::size_t>(state.range(0)));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_environment(spec, i++));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleEnvironment)->Arg(2)->Arg(8)->Arg(32);

static void BM_MonteCarloTransition(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto particle = TestParticle::equal_amplitude(n);
  const auto spec = spec_for(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_transition(particle, spec, 10000));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarloTransition)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormOverlap(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto spec = spec_for(n);
  const auto angles = make_angles(spec, sample_environment(spec, 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_overlap(n, angles));
  }
}
BENCHMARK(BM_ClosedFormOverlap)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
