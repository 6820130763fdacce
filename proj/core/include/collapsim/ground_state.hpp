#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "collapsim/capacity.hpp"
#include "collapsim/ising_model.hpp"

namespace collapsim::solver {

inline constexpr std::size_t kDefaultWitnessCap = 1024;

/// Exact minimum over all 2^N configurations. Degenerate models can have
/// exponentially many minimizers, so the stored witness list is capped (the
/// smallest basis indices are kept) while witness_count reports the true
/// number of minimizers.
struct GroundStateResult {
  double ground_energy = 0.0;
  std::vector<ising::SpinConfiguration> witnesses;  // ascending basis index
  std::uint64_t witness_count = 0;
  std::uint64_t enumerated_count = 0;  // = 2^N
};

struct BruteForceOptions {
  int threads = 1;  // 0: hardware concurrency
  std::size_t witness_cap = kDefaultWitnessCap;
  Capacity capacity{};
};

/// Exhaustive ground-state search. The index space is walked in Gray-code
/// order with incremental energy updates; every candidate minimum is
/// re-evaluated with the canonical energy sum, so the result (E0, witness
/// set, counts) does not depend on the worker count or chunking.
GroundStateResult brute_force_ground_state(const ising::IsingModel& model,
                                           const BruteForceOptions& options = {});

enum class Comparison { LessEqual, Less, Equal };

/// Threshold predicate on an energy/eigenvalue; evaluable in constant time.
struct Restraint {
  double threshold = 0.0;
  Comparison comparison = Comparison::LessEqual;

  bool admits(double eigenvalue) const;
};

struct DecisionOutcome {
  bool answer = false;
  std::optional<ising::SpinConfiguration> witness;
  bool verified = false;
  double ground_energy = 0.0;
};

/// Ground-state decision problem: does the model have E0 admitted by the
/// restraint (default E0 <= 0)? When the answer is yes the returned witness
/// is verified — against the lifted diagonal operator for dim <= 2^20, by
/// exact classical re-evaluation above that.
DecisionOutcome solve_pi0(const ising::IsingModel& model, const Restraint& restraint = {},
                          const BruteForceOptions& options = {});

}  // namespace collapsim::solver
