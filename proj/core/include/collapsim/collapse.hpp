#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "collapsim/state_vector.hpp"

namespace collapsim::collapse {

/// Small system whose basis states pick up random interaction phases.
/// Coefficients must be normalized within 1e-10.
struct TestParticle {
  std::vector<std::complex<double>> coefficients;

  std::size_t dim() const { return coefficients.size(); }
  hilbert::StateVector state() const;
  void validate() const;

  /// True when every |c_j|^2 equals 1/n within tol (phases are free).
  bool equal_amplitudes(double tol = 1e-9) const;

  static TestParticle equal_amplitude(std::size_t n);
  static TestParticle from_coefficients(std::vector<std::complex<double>> cs);
};

/// Interaction-strength estimates per branch, the interaction window, and
/// the sampling key. estimates[j] bounds the magnitude of the random part
/// a_j of the j-th interaction coefficient.
struct EnvironmentSpec {
  std::vector<double> estimates;  // all > 0
  double tau = 0.0;
  double hbar = 1.0;
  std::uint64_t sampling_seed = 0;

  std::size_t dim() const { return estimates.size(); }
  void validate() const;
};

/// One realization of the random interaction coefficients: a[j] uniform on
/// [-estimates[j], +estimates[j]], a pure function of (seed, draw_index, j).
struct RandomDraw {
  std::vector<double> a;
  std::uint64_t draw_index = 0;
};

/// Pairwise phase angles: capital_xi from the estimates, xi from one draw.
/// Both antisymmetric; |xi(j,g)| <= (estimates[j]+estimates[g])·tau/hbar.
struct AngleSet {
  std::size_t n = 0;
  std::vector<double> capital_xi;  // n*n row-major
  std::vector<double> xi;

  double capital(std::size_t j, std::size_t g) const { return capital_xi[j * n + g]; }
  double random(std::size_t j, std::size_t g) const { return xi[j * n + g]; }
};

struct TransitionStats {
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;  // sqrt(variance / samples)
  std::uint64_t samples = 0;
};

RandomDraw sample_environment(const EnvironmentSpec& spec, std::uint64_t draw_index);

/// Final state after the interaction window: amplitude j is
/// c_j·exp(-i·(estimates[j] + a[j])·tau/hbar). Pure phases, so the norm is
/// preserved; tau = 0 returns the input amplitudes bit-exactly.
hilbert::StateVector final_state(const TestParticle& particle, const RandomDraw& draw,
                                 const EnvironmentSpec& spec);

/// Probability measure on final states: fidelity against the initial state.
double overlap_probability(const TestParticle& particle, const hilbert::StateVector& final);

AngleSet make_angles(const EnvironmentSpec& spec, const RandomDraw& draw);

/// Equal-amplitude overlap evaluated directly from the angle matrices:
///   1/n + (2/n²) Σ_{j<g} (cos Ξ_jg cos ξ_jg - sin Ξ_jg sin ξ_jg).
double closed_form_overlap(std::size_t n, const AngleSet& angles);

/// Mean/variance/stderr of overlap_probability over independent draws
/// 0..samples-1. Deterministic pairwise accumulation: bit-identical for any
/// worker count given (seed, samples).
TransitionStats monte_carlo_transition(const TestParticle& particle,
                                       const EnvironmentSpec& spec, std::uint64_t samples,
                                       int threads = 1);

enum class AverageFormula {
  PaperSinc,    // sinc((Ã_j+Ã_g)·tau/hbar): single-sinc average
  ProductSinc,  // sinc(Ã_j·tau/hbar)·sinc(Ã_g·tau/hbar): exact for
                // independent uniform a_j, a_g
};

/// E[cos ξ_jg] under the chosen formula; E[sin ξ_jg] is 0 in both.
double analytic_expected_cos(double estimate_j, double estimate_g, double tau, double hbar,
                             AverageFormula formula);

/// Expected transition probability for an equal-amplitude particle:
///   1/n + (2/n²) Σ_{j<g} cos(Ξ_jg)·E[cos ξ_jg].
double analytic_transition(const TestParticle& particle, const EnvironmentSpec& spec,
                           AverageFormula formula);

/// Large-environment limit of the transition probability: 1/n.
/// Equal-amplitude particles only.
double born_limit(const TestParticle& particle);

/// Fully dephased mean overlap for arbitrary amplitudes: Σ_j |c_j|^4.
/// Derived extension of the sampler's large-angle limit; validated against
/// the Monte Carlo estimator, not part of the equal-amplitude analytics.
double dephased_mean_overlap(const TestParticle& particle);

/// Order-of-magnitude interaction estimate: electrons inside the causal
/// radius c·T times a unit coupling. Presentation helper only.
double causal_horizon_estimate(double interaction_window_seconds = 1e-3,
                               double electron_density_per_m3 = 3e29);

}  // namespace collapsim::collapse
