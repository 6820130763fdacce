#include "collapsim/cnf.hpp"

#include <cstdlib>
#include <string>

#include "collapsim/errors.hpp"

namespace collapsim::ising {

void CnfFormula::validate() const {
  if (num_vars < 1) throw InvalidInputError("CnfFormula: num_vars must be >= 1");
  for (const Clause& clause : clauses) {
    for (int lit : clause.literals) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw InvalidInputError("CnfFormula: literal " + std::to_string(lit) +
                                " outside [1, " + std::to_string(num_vars) + "]");
      }
    }
  }
}

namespace {
bool literal_true(int lit, const std::vector<bool>& assignment) {
  const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
  return lit > 0 ? value : !value;
}
}  // namespace

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  return unsatisfied_count(assignment) == 0;
}

int CnfFormula::unsatisfied_count(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != num_vars) {
    throw InvalidInputError("CnfFormula: assignment length does not match num_vars");
  }
  int unsatisfied = 0;
  for (const Clause& clause : clauses) {
    bool sat = false;
    for (int lit : clause.literals) sat = sat || literal_true(lit, assignment);
    if (!sat) ++unsatisfied;
  }
  return unsatisfied;
}

}  // namespace collapsim::ising
