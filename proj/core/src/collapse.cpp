#include "collapsim/collapse.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <thread>

#include "collapsim/counter_rng.hpp"
#include "collapsim/errors.hpp"
#include "collapsim/pairwise_sum.hpp"

namespace collapsim::collapse {

hilbert::StateVector TestParticle::state() const {
  return hilbert::StateVector{coefficients};
}

void TestParticle::validate() const {
  if (coefficients.empty()) throw InvalidInputError("TestParticle: dim must be >= 1");
  if (!state().is_normalized()) {
    throw InvalidInputError("TestParticle: coefficients must be normalized within 1e-10");
  }
}

bool TestParticle::equal_amplitudes(double tol) const {
  const double target = 1.0 / static_cast<double>(dim());
  for (const auto& c : coefficients) {
    if (std::abs(std::norm(c) - target) > tol) return false;
  }
  return true;
}

TestParticle TestParticle::equal_amplitude(std::size_t n) {
  if (n == 0) throw InvalidInputError("TestParticle: dim must be >= 1");
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  TestParticle p;
  p.coefficients.assign(n, std::complex<double>{amp, 0.0});
  return p;
}

TestParticle TestParticle::from_coefficients(std::vector<std::complex<double>> cs) {
  TestParticle p{std::move(cs)};
  p.validate();
  return p;
}

void EnvironmentSpec::validate() const {
  if (estimates.empty()) throw InvalidInputError("EnvironmentSpec: needs estimates");
  for (double a : estimates) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidInputError("EnvironmentSpec: estimates must be positive and finite");
    }
  }
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidInputError("EnvironmentSpec: tau must be finite and >= 0");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw InvalidInputError("EnvironmentSpec: hbar must be positive and finite");
  }
}

RandomDraw sample_environment(const EnvironmentSpec& spec, std::uint64_t draw_index) {
  spec.validate();
  RandomDraw draw;
  draw.draw_index = draw_index;
  draw.a.resize(spec.dim());
  for (std::size_t j = 0; j < spec.dim(); ++j) {
    draw.a[j] = rng::uniform_symmetric(spec.sampling_seed, draw_index, j, spec.estimates[j]);
  }
  return draw;
}

hilbert::StateVector final_state(const TestParticle& particle, const RandomDraw& draw,
                                 const EnvironmentSpec& spec) {
  particle.validate();
  if (draw.a.size() != particle.dim() || spec.dim() != particle.dim()) {
    throw InvalidInputError("final_state: dimension mismatch");
  }
  hilbert::StateVector out;
  out.amplitudes.resize(particle.dim());
  for (std::size_t j = 0; j < particle.dim(); ++j) {
    const double phase = -(spec.estimates[j] + draw.a[j]) * spec.tau / spec.hbar;
    out.amplitudes[j] =
        particle.coefficients[j] * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return out;
}

double overlap_probability(const TestParticle& particle, const hilbert::StateVector& final) {
  return hilbert::fidelity(particle.state(), final);
}

AngleSet make_angles(const EnvironmentSpec& spec, const RandomDraw& draw) {
  spec.validate();
  if (draw.a.size() != spec.dim()) throw InvalidInputError("make_angles: dimension mismatch");
  AngleSet angles;
  angles.n = spec.dim();
  angles.capital_xi.assign(angles.n * angles.n, 0.0);
  angles.xi.assign(angles.n * angles.n, 0.0);
  for (std::size_t j = 0; j < angles.n; ++j) {
    for (std::size_t g = 0; g < angles.n; ++g) {
      angles.capital_xi[j * angles.n + g] =
          (spec.estimates[j] - spec.estimates[g]) * spec.tau / spec.hbar;
      angles.xi[j * angles.n + g] = (draw.a[j] - draw.a[g]) * spec.tau / spec.hbar;
    }
  }
  return angles;
}

double closed_form_overlap(std::size_t n, const AngleSet& angles) {
  if (n == 0 || angles.n != n) throw InvalidInputError("closed_form_overlap: bad dimensions");
  const double nd = static_cast<double>(n);
  double cross = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t g = j + 1; g < n; ++g) {
      cross += std::cos(angles.capital(j, g)) * std::cos(angles.random(j, g)) -
               std::sin(angles.capital(j, g)) * std::sin(angles.random(j, g));
    }
  }
  return 1.0 / nd + (2.0 / (nd * nd)) * cross;
}

TransitionStats monte_carlo_transition(const TestParticle& particle,
                                       const EnvironmentSpec& spec, std::uint64_t samples,
                                       int threads) {
  particle.validate();
  spec.validate();
  if (spec.dim() != particle.dim()) {
    throw InvalidInputError("monte_carlo_transition: dimension mismatch");
  }
  if (samples < 1) throw InvalidInputError("monte_carlo_transition: samples must be >= 1");

  std::vector<double> overlaps(samples);
  auto fill = [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t i = first; i < last; ++i) {
      const RandomDraw draw = sample_environment(spec, i);
      overlaps[i] = overlap_probability(particle, final_state(particle, draw, spec));
    }
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));
  if (workers <= 1) {
    fill(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t per = samples / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t first = per * t;
      const std::uint64_t last = (t + 1 == workers) ? samples : per * (t + 1);
      pool.emplace_back(fill, first, last);
    }
    for (auto& th : pool) th.join();
  }

  TransitionStats stats;
  stats.samples = samples;
  stats.mean = pairwise_sum(std::span<const double>(overlaps)) / static_cast<double>(samples);
  if (samples > 1) {
    std::vector<double> sq(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const double d = overlaps[i] - stats.mean;
      sq[i] = d * d;
    }
    stats.variance =
        pairwise_sum(std::span<const double>(sq)) / static_cast<double>(samples - 1);
  }
  stats.standard_error = std::sqrt(stats.variance / static_cast<double>(samples));
  return stats;
}

namespace {
double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

void require_equal_amplitudes(const TestParticle& particle, const char* who) {
  particle.validate();
  if (!particle.equal_amplitudes()) {
    throw InvalidInputError(std::string(who) + ": requires |c_j|^2 = 1/n for all j");
  }
}
}  // namespace

double analytic_expected_cos(double estimate_j, double estimate_g, double tau, double hbar,
                             AverageFormula formula) {
  if (!(estimate_j > 0.0) || !(estimate_g > 0.0)) {
    throw InvalidInputError("analytic_expected_cos: estimates must be positive");
  }
  if (tau < 0.0 || !(hbar > 0.0)) {
    throw InvalidInputError("analytic_expected_cos: tau >= 0 and hbar > 0 required");
  }
  switch (formula) {
    case AverageFormula::PaperSinc:
      return sinc((estimate_j + estimate_g) * tau / hbar);
    case AverageFormula::ProductSinc:
      return sinc(estimate_j * tau / hbar) * sinc(estimate_g * tau / hbar);
  }
  return 0.0;
}

double analytic_transition(const TestParticle& particle, const EnvironmentSpec& spec,
                           AverageFormula formula) {
  require_equal_amplitudes(particle, "analytic_transition");
  spec.validate();
  if (spec.dim() != particle.dim()) {
    throw InvalidInputError("analytic_transition: dimension mismatch");
  }
  const double n = static_cast<double>(particle.dim());
  double cross = 0.0;
  for (std::size_t j = 0; j + 1 < particle.dim(); ++j) {
    for (std::size_t g = j + 1; g < particle.dim(); ++g) {
      const double capital_xi = (spec.estimates[j] - spec.estimates[g]) * spec.tau / spec.hbar;
      cross += std::cos(capital_xi) * analytic_expected_cos(spec.estimates[j],
                                                            spec.estimates[g], spec.tau,
                                                            spec.hbar, formula);
    }
  }
  return 1.0 / n + (2.0 / (n * n)) * cross;
}

double born_limit(const TestParticle& particle) {
  require_equal_amplitudes(particle, "born_limit");
  return 1.0 / static_cast<double>(particle.dim());
}

double dephased_mean_overlap(const TestParticle& particle) {
  particle.validate();
  double sum = 0.0;
  for (const auto& c : particle.coefficients) {
    const double p = std::norm(c);
    sum += p * p;
  }
  return sum;
}

double causal_horizon_estimate(double interaction_window_seconds,
                               double electron_density_per_m3) {
  if (!(interaction_window_seconds > 0.0) || !(electron_density_per_m3 > 0.0)) {
    throw InvalidInputError("causal_horizon_estimate: inputs must be positive");
  }
  constexpr double kSpeedOfLight = 299792458.0;  // m/s
  const double radius = kSpeedOfLight * interaction_window_seconds;
  const double volume = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  return volume * electron_density_per_m3;  // electrons x unit coupling
}

}  // namespace collapsim::collapse
