#include "collapsim/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <utility>

#include "collapsim/counter_rng.hpp"
#include "collapsim/errors.hpp"

namespace collapsim::solver {

ising::IsingModel random_integer_model(int num_spins, std::uint64_t seed) {
  if (num_spins < 1) throw InvalidInputError("random_integer_model: num_spins must be >= 1");

  ising::IsingModel model;
  model.num_spins = num_spins;
  model.moment = 1.0;
  model.fields.resize(static_cast<std::size_t>(num_spins));

  const std::uint64_t n64 = static_cast<std::uint64_t>(num_spins);
  for (int j = 0; j < num_spins; ++j) {
    const std::uint64_t word = rng::counter_word(seed, n64, 0x100000000ULL + j);
    model.fields[static_cast<std::size_t>(j)] = static_cast<double>(word % 7) - 3.0;
  }

  const std::uint64_t max_pairs = n64 * (n64 - 1) / 2;
  const std::uint64_t target = std::min<std::uint64_t>(3 * n64, max_pairs);
  std::set<std::pair<int, int>> pairs;
  std::uint64_t attempt = 0;
  while (pairs.size() < target) {
    const std::uint64_t w1 = rng::counter_word(seed, n64, 0x200000000ULL + attempt);
    const std::uint64_t w2 = rng::counter_word(seed, n64, 0x300000000ULL + attempt);
    ++attempt;
    int j = static_cast<int>(w1 % n64);
    int k = static_cast<int>(w2 % n64);
    if (j == k) continue;
    if (j > k) std::swap(j, k);
    if (!pairs.insert({j, k}).second) continue;
    const std::uint64_t w3 = rng::counter_word(seed, n64, 0x400000000ULL + attempt);
    const double magnitude = static_cast<double>(w3 % 5) + 1.0;
    model.couplings.push_back({j, k, (w3 & 0x8000000000000000ULL) ? -magnitude : magnitude});
  }
  std::sort(model.couplings.begin(), model.couplings.end(),
            [](const ising::Coupling& a, const ising::Coupling& b) {
              return std::make_pair(a.j, a.k) < std::make_pair(b.j, b.k);
            });
  model.validate();
  return model;
}

std::optional<double> fit_log2_slope(const std::vector<BenchRecord>& records,
                                     double min_seconds) {
  // Longest contiguous run of records meeting the timing floor.
  std::size_t best_begin = 0, best_len = 0;
  std::size_t begin = 0;
  while (begin < records.size()) {
    if (records[begin].wall_time < min_seconds) {
      ++begin;
      continue;
    }
    std::size_t end = begin;
    while (end < records.size() && records[end].wall_time >= min_seconds) ++end;
    if (end - begin >= best_len) {  // >=: prefer the later (larger-N) run
      best_begin = begin;
      best_len = end - begin;
    }
    begin = end;
  }
  if (best_len < 2) return std::nullopt;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = best_begin; i < best_begin + best_len; ++i) {
    const double x = records[i].num_spins;
    const double y = std::log2(records[i].wall_time);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = static_cast<double>(best_len);
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (count * sxy - sx * sy) / denom;
}

ScalingResult scaling_benchmark(const std::vector<int>& n_range, std::uint64_t instance_seed,
                                int repetitions, const BruteForceOptions& options) {
  using clock = std::chrono::steady_clock;
  ScalingResult result;
  const int reps = std::max(1, repetitions);

  for (int n : n_range) {
    try {
      const ising::IsingModel model = random_integer_model(n, instance_seed);
      double best_time = 0.0;
      std::uint64_t enumerated = 0;
      for (int r = 0; r < reps; ++r) {
        const auto start = clock::now();
        const GroundStateResult ground = brute_force_ground_state(model, options);
        const std::chrono::duration<double> elapsed = clock::now() - start;
        enumerated = ground.enumerated_count;
        if (r == 0 || elapsed.count() < best_time) best_time = elapsed.count();
      }
      result.records.push_back(BenchRecord{n, best_time, enumerated, instance_seed});
    } catch (const CapacityError&) {
      break;  // keep what we have
    }
  }
  result.fitted_slope = fit_log2_slope(result.records);
  return result;
}

}  // namespace collapsim::solver
