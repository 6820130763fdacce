#include "collapsim/feasibility.hpp"

#include <cmath>

#include "collapsim/errors.hpp"

namespace collapsim::solver {

FeasibilityReport feasibility(double log2_ops, double budget_seconds) {
  if (!(log2_ops >= 0.0) || !std::isfinite(log2_ops)) {
    throw InvalidInputError("feasibility: log2_ops must be finite and >= 0");
  }
  if (!(budget_seconds > 0.0) || !std::isfinite(budget_seconds)) {
    throw InvalidInputError("feasibility: budget must be positive and finite");
  }
  FeasibilityReport report;
  report.log10_seconds_per_op = std::log10(budget_seconds) - log2_ops * std::log10(2.0);
  report.verdict = report.log10_seconds_per_op < report.planck_log10
                       ? Feasibility::SubPlanckInfeasible
                       : Feasibility::Feasible;
  return report;
}

}  // namespace collapsim::solver
