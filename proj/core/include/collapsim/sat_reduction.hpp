#pragma once

#include <vector>

#include "collapsim/cnf.hpp"
#include "collapsim/ising_model.hpp"

namespace collapsim::ising {

/// Bookkeeping produced by encode_3sat: which spin carries which CNF
/// variable, which spins are per-clause ancillas, and the energy of one
/// violated clause.
struct ReductionCertificate {
  std::vector<int> variable_to_spin;  // index v-1 -> spin index, injective
  std::vector<int> ancilla_spins;     // one per clause, disjoint from variables
  double penalty_unit = 1.0;

  int num_variables() const { return static_cast<int>(variable_to_spin.size()); }
  int total_spins() const {
    return num_variables() + static_cast<int>(ancilla_spins.size());
  }
};

struct EncodedProblem {
  IsingModel model;
  ReductionCertificate certificate;
};

/// Reduce a 3-SAT formula to an Ising ground-state decision problem with
/// one ancilla spin per clause (N = num_vars + num_clauses).
///
/// Each clause contributes a quadratic gadget whose minimum over the clause
/// ancilla is exactly 0 when the clause is satisfied and penalty_unit (= 1)
/// when it is not, so the global ground energy equals the minimum number of
/// simultaneously violated clauses: satisfiable  <=>  E0 = 0  <=>  E0 <= 0.
EncodedProblem encode_3sat(const CnfFormula& cnf);

/// Read variable spins back into a Boolean assignment (σ=+1 -> true),
/// discarding ancillas.
std::vector<bool> decode_assignment(const ReductionCertificate& certificate,
                                    const SpinConfiguration& config);

}  // namespace collapsim::ising
