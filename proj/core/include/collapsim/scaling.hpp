#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "collapsim/ground_state.hpp"
#include "collapsim/ising_model.hpp"

namespace collapsim::solver {

struct BenchRecord {
  int num_spins = 0;
  double wall_time = 0.0;  // seconds, best of the configured repetitions
  std::uint64_t configurations_enumerated = 0;  // = 2^N
  std::uint64_t seed = 0;
};

struct ScalingResult {
  std::vector<BenchRecord> records;
  std::optional<double> fitted_slope;  // absent when fewer than 2 usable points
};

/// Deterministic random spin glass with integer couplings/fields: min(3N,
/// C(N,2)) distinct coupling pairs with J in ±{1..5}, fields in [-3, 3].
/// Bit-identical for a fixed (seed, n) on every platform and worker count.
ising::IsingModel random_integer_model(int num_spins, std::uint64_t seed);

/// Least-squares slope of log2(wall_time) against N over the longest
/// contiguous run of records with wall_time >= min_seconds (ties broken
/// toward larger N). Sub-threshold timings are timer noise, not signal.
std::optional<double> fit_log2_slope(const std::vector<BenchRecord>& records,
                                     double min_seconds = 0.01);

/// Times brute_force_ground_state on random integer models for each N and
/// fits the exponential-growth slope. Per-N failures truncate the record
/// list instead of raising.
ScalingResult scaling_benchmark(const std::vector<int>& n_range, std::uint64_t instance_seed,
                                int repetitions = 3, const BruteForceOptions& options = {});

}  // namespace collapsim::solver
