#pragma once

namespace collapsim::solver {

/// Physical floor for one operation, as log10(seconds).
inline constexpr double kPlanckLog10Seconds = -43.0;

/// One year of wall time in seconds, as used by the feasibility arithmetic.
inline constexpr double kYearSeconds = 3.156e7;

enum class Feasibility { Feasible, SubPlanckInfeasible };

struct FeasibilityReport {
  double log10_seconds_per_op = 0.0;
  double planck_log10 = kPlanckLog10Seconds;
  Feasibility verdict = Feasibility::Feasible;
};

/// Seconds per operation available when 2^log2_ops operations must finish
/// within the budget, carried entirely in log10 (2^(10^24) has no float
/// representation). Infeasible when the per-op time falls below one Planck
/// time.
FeasibilityReport feasibility(double log2_ops, double budget_seconds);

}  // namespace collapsim::solver
