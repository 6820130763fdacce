// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Statistical criteria use fixed seeds, so reruns are
// deterministic.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "collapsim/collapse.hpp"
#include "collapsim/dimacs.hpp"
#include "collapsim/evolution.hpp"
#include "collapsim/feasibility.hpp"
#include "collapsim/ground_state.hpp"
#include "collapsim/sat_reduction.hpp"
#include "collapsim/scaling.hpp"
#include "collapsim/spectrum.hpp"
#include "oracles.hpp"

using namespace collapsim;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
  void note(const std::string& text) {
    if (ok) detail = text;
  }
};

hilbert::HermitianOperator to_operator(const oracles::DenseMatrix& m) {
  Eigen::MatrixXcd mat(m.n, m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m.at(r, c);
    }
  }
  return hilbert::HermitianOperator::from_matrix(mat);
}

hilbert::StateVector random_normalized(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  hilbert::StateVector psi;
  for (std::size_t j = 0; j < n; ++j) psi.amplitudes.emplace_back(u(gen), u(gen));
  return psi.normalized();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

// --- criterion 1: Born-rule emergence -------------------------------------
Check born_rule_emergence() {
  Check check;
  std::string details;
  for (std::size_t n : {2ul, 3ul, 4ul}) {
    const auto particle = collapse::TestParticle::equal_amplitude(n);
    collapse::EnvironmentSpec spec;
    // smallest pairwise sum is estimates[0]+estimates[1] = 1500 >= 1e3
    for (std::size_t j = 0; j < n; ++j) spec.estimates.push_back(500.0 * (j + 1));
    spec.tau = 1.0;
    spec.hbar = 1.0;
    spec.sampling_seed = 90210 + n;
    const auto stats = collapse::monte_carlo_transition(particle, spec, 100000);
    const double target = 1.0 / static_cast<double>(n);
    const double bound = std::max(3.0 * stats.standard_error, 0.01);
    check.require(std::abs(stats.mean - target) <= bound,
                  "n=" + std::to_string(n) + ": |" + fmt(stats.mean) + " - " + fmt(target) +
                      "| > " + fmt(bound));
    details += (details.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
               fmt(std::abs(stats.mean - target)) + " <= " + fmt(bound);
  }
  check.note(details);
  return check;
}

// --- criterion 2: per-sample identity --------------------------------------
Check per_sample_identity() {
  Check check;
  double worst = 0.0;
  std::uint64_t draws_total = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto particle = collapse::TestParticle::equal_amplitude(n);
    collapse::EnvironmentSpec spec;
    for (std::size_t j = 0; j < n; ++j) spec.estimates.push_back(0.4 + 1.1 * j);
    spec.tau = 1.7;
    spec.hbar = 1.0;
    spec.sampling_seed = 777 + n;
    for (std::uint64_t i = 0; i < 1429; ++i, ++draws_total) {
      const auto draw = collapse::sample_environment(spec, i);
      const double sampled = collapse::overlap_probability(
          particle, collapse::final_state(particle, draw, spec));
      const double closed =
          collapse::closed_form_overlap(n, collapse::make_angles(spec, draw));
      worst = std::max(worst, std::abs(sampled - closed));
    }
  }
  check.require(worst <= 1e-10, "max |sampled - closed| = " + fmt(worst));
  check.note("max diff " + fmt(worst) + " over " + std::to_string(draws_total) + " draws");
  return check;
}

// --- criterion 3: analytic averages -----------------------------------------
Check analytic_averages() {
  Check check;
  std::mt19937_64 gen(5150);
  std::uniform_real_distribution<double> estimate(0.3, 4.0);
  std::uniform_real_distribution<double> tau(0.1, 3.0);
  double worst_cos_pull = 0.0, worst_sin_pull = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    collapse::EnvironmentSpec spec;
    spec.estimates = {estimate(gen), estimate(gen)};
    spec.tau = tau(gen);
    spec.hbar = 1.0;
    spec.sampling_seed = 50001 + trial;

    const std::uint64_t samples = 1000000;
    double cos_sum = 0.0, cos_sq = 0.0, sin_sum = 0.0, sin_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const auto draw = collapse::sample_environment(spec, i);
      const double xi = (draw.a[0] - draw.a[1]) * spec.tau / spec.hbar;
      const double c = std::cos(xi), s = std::sin(xi);
      cos_sum += c;
      cos_sq += c * c;
      sin_sum += s;
      sin_sq += s * s;
    }
    const double cos_mean = cos_sum / samples;
    const double cos_sigma =
        std::sqrt((cos_sq / samples - cos_mean * cos_mean) / static_cast<double>(samples));
    const double expected = collapse::analytic_expected_cos(
        spec.estimates[0], spec.estimates[1], spec.tau, spec.hbar,
        collapse::AverageFormula::ProductSinc);
    const double cos_pull = std::abs(cos_mean - expected) / std::max(cos_sigma, 1e-300);
    worst_cos_pull = std::max(worst_cos_pull, cos_pull);
    check.require(cos_pull <= 3.0, "cos mismatch at trial " + std::to_string(trial) +
                                       ": pull " + fmt(cos_pull));

    const double sin_mean = sin_sum / samples;
    const double sin_sigma =
        std::sqrt((sin_sq / samples - sin_mean * sin_mean) / static_cast<double>(samples));
    const double sin_pull = std::abs(sin_mean) / std::max(sin_sigma, 1e-300);
    worst_sin_pull = std::max(worst_sin_pull, sin_pull);
    check.require(sin_pull <= 3.0,
                  "sin mean off zero at trial " + std::to_string(trial) + ": pull " +
                      fmt(sin_pull));
  }

  const double at_pi = collapse::analytic_expected_cos(
      1.0, std::acos(-1.0) - 1.0, 1.0, 1.0, collapse::AverageFormula::PaperSinc);
  check.require(std::abs(at_pi) <= 1e-12, "paper-sinc at pi: " + fmt(at_pi));
  check.note("worst pulls: cos " + fmt(worst_cos_pull) + ", sin " + fmt(worst_sin_pull) +
             "; paper-sinc(pi) = " + fmt(at_pi));
  return check;
}

// --- criterion 4: zero-interaction limit ------------------------------------
Check zero_interaction() {
  Check check;
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 1 + gen() % 6;
    const auto psi = random_normalized(gen, n);
    const auto particle = collapse::TestParticle::from_coefficients(psi.amplitudes);
    collapse::EnvironmentSpec spec;
    for (std::size_t j = 0; j < n; ++j) spec.estimates.push_back(1.0 + j);
    spec.tau = 0.0;
    spec.hbar = 1.0;
    spec.sampling_seed = trial;
    const auto stats = collapse::monte_carlo_transition(particle, spec, 1000);
    check.require(stats.mean == 1.0, "mean != 1 exactly (n=" + std::to_string(n) + ")");
    check.require(stats.variance == 0.0, "variance != 0 exactly");
  }
  check.note("mean = 1 and variance = 0 bit-exactly for 5 random particles");
  return check;
}

// --- criterion 5: reduction correctness -------------------------------------
Check reduction_correctness() {
  Check check;
  int disagreements = 0, cases = 0, satisfiable = 0;

  auto check_formula = [&](const ising::CnfFormula& cnf) {
    const auto encoded = ising::encode_3sat(cnf);
    const auto outcome = solver::solve_pi0(encoded.model);
    const bool expected = oracles::sat_oracle(cnf);
    ++cases;
    if (outcome.answer != expected) ++disagreements;
    if (expected) {
      ++satisfiable;
      if (!outcome.verified ||
          !cnf.satisfied_by(ising::decode_assignment(encoded.certificate, *outcome.witness))) {
        ++disagreements;
      }
    }
  };

  for (const char* name : {"/tautology.cnf", "/unsat8.cnf"}) {
    std::ifstream in(std::string(COLLAPSIM_DATA_DIR) + name);
    if (!in) {
      check.require(false, std::string("missing corpus file ") + name);
      return check;
    }
    check_formula(io::parse_dimacs(in));
  }

  std::mt19937_64 gen(1202);
  for (int trial = 0; trial < 200; ++trial) {
    const int num_vars = 2 + static_cast<int>(gen() % 7);      // <= 8
    const int num_clauses = 1 + static_cast<int>(gen() % 12);  // <= 12
    check_formula(oracles::random_cnf(gen, num_vars, num_clauses));
  }

  check.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  check.note(std::to_string(cases) + " instances (" + std::to_string(satisfiable) +
             " satisfiable), 0 disagreements");
  return check;
}

// --- criterion 6: diagonal-lift exactness -----------------------------------
Check diagonal_lift_exactness() {
  Check check;
  std::mt19937_64 gen(6);
  int entries = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 9);  // 2..10
    const auto model = solver::random_integer_model(n, 9000 + trial);
    const auto lift = ising::build_quantum_diagonal(model);
    for (std::uint64_t b = 0; b < lift.dim(); ++b, ++entries) {
      const double independent =
          oracles::energy_dense(model, oracles::spins_of_index(b, n));
      if (lift.energies()[b] != independent) {
        check.require(false, "entry " + std::to_string(b) + " of model " +
                                 std::to_string(trial) + " differs");
        return check;
      }
    }
  }
  check.note(std::to_string(entries) + " diagonal entries equal the classical energies");
  return check;
}

// --- criterion 7: verification ----------------------------------------------
Check verification_suite() {
  Check check;
  std::mt19937_64 gen(7);

  for (int trial = 0; trial < 10; ++trial) {
    const auto h = to_operator(oracles::random_hermitian_dense(gen, 6));
    const auto spectrum = solver::exact_spectrum(h);
    for (std::size_t i = 0; i < 6; ++i) {
      check.require(solver::verify_eigenpair(h, (*spectrum.eigenvectors)[i],
                                             spectrum.eigenvalues[i], 1e-8),
                    "eigenpair " + std::to_string(i) + " failed at 1e-8");
    }
  }

  const double step = 1e-6;
  for (int trial = 0; trial < 10; ++trial) {
    const auto dense = oracles::random_hermitian_dense(gen, 5);
    const auto h = to_operator(dense);
    const auto psi = random_normalized(gen, 5);
    std::vector<solver::TrajectorySample> trajectory;
    for (int i = 0; i < 6; ++i) {
      trajectory.push_back(
          {i * step, hilbert::evolve(psi, h, hilbert::PropagatorSpec{i * step, 1.0})});
    }
    check.require(solver::verify_time_evolution(h, trajectory, step, 1e-3),
                  "correct-Hamiltonian trajectory rejected");

    Eigen::MatrixXcd wrong = h.matrix();
    for (int i = 0; i < 5; ++i) wrong(i, i) += 1.0;
    check.require(!solver::verify_time_evolution(hilbert::HermitianOperator::from_matrix(wrong),
                                                 trajectory, step, 1e-3),
                  "wrong-Hamiltonian trajectory accepted");
  }
  check.note("eigenpairs at 1e-8; trajectories at step 1e-6, tol 1e-3; wrong H rejected");
  return check;
}

// --- criterion 8: exponential wall -------------------------------------------
Check exponential_wall() {
  Check check;
  std::vector<int> range;
  for (int n = 16; n <= 26; ++n) range.push_back(n);
  solver::BruteForceOptions options;
  options.threads = 1;  // clean single-worker scaling signal
  const auto result = solver::scaling_benchmark(range, 2026, 3, options);

  check.require(result.records.size() == range.size(), "missing records");
  for (const auto& record : result.records) {
    check.require(record.configurations_enumerated ==
                      (std::uint64_t{1} << record.num_spins),
                  "enumeration count mismatch at N=" + std::to_string(record.num_spins));
  }
  check.require(result.fitted_slope.has_value(), "no slope (all runs under 10 ms)");
  if (result.fitted_slope) {
    check.require(*result.fitted_slope >= 0.8 && *result.fitted_slope <= 1.2,
                  "slope " + fmt(*result.fitted_slope) + " outside [0.8, 1.2]");
    check.note("slope " + fmt(*result.fitted_slope) + " over N=16..26");
  }
  return check;
}

// --- criterion 9: feasibility calculus ---------------------------------------
Check feasibility_calculus() {
  Check check;
  const auto report = solver::feasibility(1e24, solver::kYearSeconds);
  const double expected = std::log10(solver::kYearSeconds) - 1e24 * std::log10(2.0);
  check.require(report.log10_seconds_per_op == expected, "formula mismatch");
  check.require(std::abs(report.log10_seconds_per_op + 3.0103e23) <= 1e20,
                "magnitude " + fmt(report.log10_seconds_per_op));
  check.require(report.verdict == solver::Feasibility::SubPlanckInfeasible,
                "verdict not sub-Planck-infeasible");
  check.note("log10 s/op = " + fmt(report.log10_seconds_per_op) + ", sub-Planck-infeasible");
  return check;
}

// --- criterion 10: unitarity suite --------------------------------------------
Check unitarity_suite() {
  Check check;
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> tau(0.0, 2.0);
  double worst_drift = 0.0, worst_composition = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + gen() % 15;  // dim <= 16
    const auto h = to_operator(oracles::random_hermitian_dense(gen, n));
    const auto psi = random_normalized(gen, n);
    const double tau1 = tau(gen), tau2 = tau(gen);

    const auto once = hilbert::evolve(psi, h, hilbert::PropagatorSpec{tau1, 1.0});
    worst_drift = std::max(worst_drift, std::abs(once.norm() - 1.0));

    const auto stepwise = hilbert::evolve(once, h, hilbert::PropagatorSpec{tau2, 1.0});
    const auto direct = hilbert::evolve(psi, h, hilbert::PropagatorSpec{tau1 + tau2, 1.0});
    for (std::size_t j = 0; j < n; ++j) {
      worst_composition = std::max(
          worst_composition, std::abs(stepwise.amplitudes[j] - direct.amplitudes[j]));
    }
  }
  check.require(worst_drift <= 1e-10, "norm drift " + fmt(worst_drift));
  check.require(worst_composition <= 1e-8, "composition error " + fmt(worst_composition));
  check.note("worst drift " + fmt(worst_drift) + ", worst composition error " +
             fmt(worst_composition) + " over 1000 triples");
  return check;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0: no stated budget
    std::function<Check()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "Born-rule emergence (large-environment limit)", 10.0, born_rule_emergence},
      {2, "per-sample identity: sampled overlap vs closed form", 0.0, per_sample_identity},
      {3, "analytic cosine/sine averages vs Monte Carlo", 0.0, analytic_averages},
      {4, "zero-interaction limit is exact", 0.0, zero_interaction},
      {5, "3-SAT reduction matches the SAT oracle", 30.0, reduction_correctness},
      {6, "diagonal lift equals classical energies exactly", 0.0, diagonal_lift_exactness},
      {7, "eigenpair and trajectory verification", 0.0, verification_suite},
      {8, "exponential scaling wall: slope of log2(time) vs N", 300.0, exponential_wall},
      {9, "sub-Planck feasibility arithmetic", 0.0, feasibility_calculus},
      {10, "unitarity and composition of the propagator", 0.0, unitarity_suite},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = criterion.run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (criterion.budget_seconds > 0.0 && elapsed.count() > criterion.budget_seconds) {
      check.ok = false;
      check.detail += " [over budget: " + fmt(elapsed.count()) + " s > " +
                      fmt(criterion.budget_seconds) + " s]";
    }
    if (!check.ok) ++failures;
    std::cout << (check.ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
              << criterion.name << " (" << check.detail << ") [" << fmt(elapsed.count())
              << " s]\n";
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures;
}
