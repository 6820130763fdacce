#include "collapsim/ground_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "collapsim/errors.hpp"
#include "collapsim/spectrum.hpp"
#include "collapsim/state_vector.hpp"

namespace collapsim::solver {

namespace {

struct Neighbor {
  int spin;
  double strength;
};

struct Adjacency {
  std::vector<std::vector<Neighbor>> neighbors;
  std::vector<double> field_term;  // μ·h_j

  explicit Adjacency(const ising::IsingModel& model)
      : neighbors(static_cast<std::size_t>(model.num_spins)),
        field_term(static_cast<std::size_t>(model.num_spins)) {
    for (const ising::Coupling& c : model.couplings) {
      neighbors[static_cast<std::size_t>(c.j)].push_back({c.k, c.strength});
      neighbors[static_cast<std::size_t>(c.k)].push_back({c.j, c.strength});
    }
    for (int j = 0; j < model.num_spins; ++j) {
      field_term[static_cast<std::size_t>(j)] =
          model.moment * model.fields[static_cast<std::size_t>(j)];
    }
  }
};

struct ChunkResult {
  double best = 0.0;
  bool has_best = false;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> witness_bits;  // up to cap smallest indices
};

// Walks Gray-code positions [first, last) of the enumeration. Incremental
// energies are only a filter: every candidate is re-evaluated with the
// canonical sum (classical_energy) before it can become the minimum, and the
// walker resynchronizes to that value, so chunk boundaries cannot change the
// reported energies.
ChunkResult scan_chunk(const ising::IsingModel& model, const Adjacency& adj,
                       std::uint64_t first, std::uint64_t last, std::size_t cap,
                       double guard) {
  const int n = model.num_spins;
  ChunkResult result;
  if (first >= last) return result;

  std::uint64_t bits = first ^ (first >> 1);
  ising::SpinConfiguration config = ising::SpinConfiguration::from_bits(bits, n);
  std::vector<int>& spins = config.spins;

  double energy = ising::classical_energy(model, config);

  auto consider = [&](std::uint64_t b, double canonical) {
    if (!result.has_best || canonical < result.best) {
      result.best = canonical;
      result.has_best = true;
      result.count = 1;
      result.witness_bits.assign(1, b);
    } else if (canonical == result.best) {
      ++result.count;
      if (result.witness_bits.size() < cap) {
        result.witness_bits.push_back(b);
      } else {
        auto max_it = std::max_element(result.witness_bits.begin(), result.witness_bits.end());
        if (b < *max_it) *max_it = b;
      }
    }
  };

  consider(bits, energy);

  for (std::uint64_t m = first + 1; m < last; ++m) {
    const int bit = std::countr_zero(m);  // flipped Gray bit between m-1 and m
    const int spin_index = n - 1 - bit;
    const std::size_t sj = static_cast<std::size_t>(spin_index);

    double local = adj.field_term[sj];
    for (const Neighbor& nb : adj.neighbors[sj]) {
      local += nb.strength * spins[static_cast<std::size_t>(nb.spin)];
    }
    energy += 2.0 * spins[sj] * local;
    spins[sj] = -spins[sj];
    bits ^= std::uint64_t{1} << bit;

    if (!result.has_best || energy <= result.best + guard) {
      const double canonical = ising::classical_energy(model, config);
      energy = canonical;
      consider(bits, canonical);
    }
  }
  return result;
}

}  // namespace

GroundStateResult brute_force_ground_state(const ising::IsingModel& model,
                                           const BruteForceOptions& options) {
  model.validate();
  const int n = model.num_spins;
  if (n > options.capacity.max_bruteforce_spins) {
    throw CapacityError("brute_force_ground_state: " + std::to_string(n) +
                        " spins exceed the " +
                        std::to_string(options.capacity.max_bruteforce_spins) + "-spin limit");
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  const Adjacency adj(model);

  // Filter width for admitting candidates to canonical re-evaluation; scaled
  // to the largest energy magnitude the model can reach.
  double scale = std::abs(model.offset);
  for (const ising::Coupling& c : model.couplings) scale += std::abs(c.strength);
  for (double h : model.fields) scale += std::abs(model.moment * h);
  const double guard = 1e-9 * (1.0 + scale);

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<ChunkResult> chunks(threads);
  if (threads == 1) {
    chunks[0] = scan_chunk(model, adj, 0, total, options.witness_cap, guard);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t per = total / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t first = per * t;
      const std::uint64_t last = (t + 1 == threads) ? total : per * (t + 1);
      pool.emplace_back([&, t, first, last] {
        chunks[t] = scan_chunk(model, adj, first, last, options.witness_cap, guard);
      });
    }
    for (auto& th : pool) th.join();
  }

  GroundStateResult result;
  result.enumerated_count = total;
  std::vector<std::uint64_t> merged_bits;
  for (const ChunkResult& chunk : chunks) {
    if (!chunk.has_best) continue;
    if (result.witness_count == 0 || chunk.best < result.ground_energy) {
      result.ground_energy = chunk.best;
      result.witness_count = chunk.count;
      merged_bits = chunk.witness_bits;
    } else if (chunk.best == result.ground_energy) {
      result.witness_count += chunk.count;
      merged_bits.insert(merged_bits.end(), chunk.witness_bits.begin(),
                         chunk.witness_bits.end());
    }
  }
  std::sort(merged_bits.begin(), merged_bits.end());
  if (merged_bits.size() > options.witness_cap) merged_bits.resize(options.witness_cap);
  result.witnesses.reserve(merged_bits.size());
  for (std::uint64_t b : merged_bits) {
    result.witnesses.push_back(ising::SpinConfiguration::from_bits(b, n));
  }
  return result;
}

bool Restraint::admits(double eigenvalue) const {
  switch (comparison) {
    case Comparison::LessEqual:
      return eigenvalue <= threshold;
    case Comparison::Less:
      return eigenvalue < threshold;
    case Comparison::Equal:
      return eigenvalue == threshold;
  }
  return false;
}

DecisionOutcome solve_pi0(const ising::IsingModel& model, const Restraint& restraint,
                          const BruteForceOptions& options) {
  const GroundStateResult ground = brute_force_ground_state(model, options);

  DecisionOutcome outcome;
  outcome.ground_energy = ground.ground_energy;
  outcome.answer = restraint.admits(ground.ground_energy);
  if (!outcome.answer) return outcome;

  outcome.witness = ground.witnesses.front();
  if (model.num_spins <= 20) {
    const auto lifted = ising::build_quantum_diagonal(model, options.capacity);
    const auto basis = hilbert::StateVector::basis(lifted.dim(), outcome.witness->to_bits());
    outcome.verified = verify_eigenpair(lifted, basis, ground.ground_energy, 1e-12);
  } else {
    outcome.verified =
        ising::classical_energy(model, *outcome.witness) == ground.ground_energy;
  }
  return outcome;
}

}  // namespace collapsim::solver
