#pragma once

#include <array>
#include <vector>

namespace collapsim::ising {

/// Exactly-3-literal clause. Literals are signed 1-based variable indices;
/// shorter source clauses are padded by literal repetition on ingestion.
struct Clause {
  std::array<int, 3> literals{};
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  /// Throws InvalidInputError on num_vars < 1, zero literals, or literals
  /// referencing variables outside [1, num_vars].
  void validate() const;

  /// assignment[v-1] is the value of variable v.
  bool satisfied_by(const std::vector<bool>& assignment) const;

  /// Number of clauses with no true literal under the assignment.
  int unsatisfied_count(const std::vector<bool>& assignment) const;
};

}  // namespace collapsim::ising
