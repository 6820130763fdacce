#include "collapsim/sat_reduction.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "collapsim/errors.hpp"

namespace collapsim::ising {

namespace {

// Affine function of a single spin: c + g·σ_index. Used to express the
// Boolean building blocks of the clause gadget (literal-false indicators
// and the ancilla) before expanding their pairwise products.
struct SpinAffine {
  double constant = 0.0;
  double gain = 0.0;
  int index = -1;  // -1: no spin term
};

// Quadratic polynomial over spins: constant + Σ l_j σ_j + Σ_{j<k} q_jk σ_j σ_k.
struct SpinQuadratic {
  double constant = 0.0;
  std::map<int, double> linear;
  std::map<std::pair<int, int>, double> quadratic;

  void add_linear(int j, double value) {
    if (value != 0.0) linear[j] += value;
  }
  void add_pair(int j, int k, double value) {
    if (value == 0.0) return;
    if (j == k) {
      constant += value;  // σ² = 1
    } else {
      quadratic[{std::min(j, k), std::max(j, k)}] += value;
    }
  }

  void add_affine(const SpinAffine& a, double scale) {
    constant += scale * a.constant;
    if (a.index >= 0) add_linear(a.index, scale * a.gain);
  }

  // (a)(b), with same-spin products folded into the constant.
  void add_product(const SpinAffine& a, const SpinAffine& b, double scale) {
    constant += scale * a.constant * b.constant;
    if (b.index >= 0) add_linear(b.index, scale * a.constant * b.gain);
    if (a.index >= 0) add_linear(a.index, scale * a.gain * b.constant);
    if (a.index >= 0 && b.index >= 0) add_pair(a.index, b.index, scale * a.gain * b.gain);
  }
};

// Indicator that literal `lit` is false, as a function of its variable spin
// (σ=+1 means the variable is true):  u = (1 - s·σ)/2,  s = sign(lit).
SpinAffine literal_false_indicator(int lit) {
  const int spin = std::abs(lit) - 1;
  const double sign = lit > 0 ? 1.0 : -1.0;
  return SpinAffine{0.5, -0.5 * sign, spin};
}

}  // namespace

EncodedProblem encode_3sat(const CnfFormula& cnf) {
  cnf.validate();

  const int num_vars = cnf.num_vars;
  const int num_clauses = static_cast<int>(cnf.clauses.size());

  ReductionCertificate certificate;
  certificate.variable_to_spin.resize(static_cast<std::size_t>(num_vars));
  for (int v = 0; v < num_vars; ++v) certificate.variable_to_spin[v] = v;
  certificate.ancilla_spins.resize(static_cast<std::size_t>(num_clauses));
  for (int c = 0; c < num_clauses; ++c) certificate.ancilla_spins[c] = num_vars + c;
  certificate.penalty_unit = 1.0;

  SpinQuadratic total;
  for (int c = 0; c < num_clauses; ++c) {
    const Clause& clause = cnf.clauses[static_cast<std::size_t>(c)];
    const SpinAffine u1 = literal_false_indicator(clause.literals[0]);
    const SpinAffine u2 = literal_false_indicator(clause.literals[1]);
    const SpinAffine u3 = literal_false_indicator(clause.literals[2]);
    // Ancilla as a Boolean: w = (1 + σ_a)/2.
    const SpinAffine w{0.5, 0.5, certificate.ancilla_spins[static_cast<std::size_t>(c)]};

    // The clause is violated iff u1·u2·u3 = 1. That cubic monomial equals
    //   min over w of  w·(1 - u1 - u2 - u3) + u1·u2 + u2·u3 + u1·u3,
    // which is quadratic in Booleans, hence quadratic in spins.
    total.add_affine(w, 1.0);
    total.add_product(w, u1, -1.0);
    total.add_product(w, u2, -1.0);
    total.add_product(w, u3, -1.0);
    total.add_product(u1, u2, 1.0);
    total.add_product(u2, u3, 1.0);
    total.add_product(u1, u3, 1.0);
  }

  IsingModel model;
  model.num_spins = num_vars + num_clauses;
  model.fields.assign(static_cast<std::size_t>(model.num_spins), 0.0);
  model.moment = 1.0;
  model.offset = total.constant;
  for (const auto& [spin, gain] : total.linear) {
    model.fields[static_cast<std::size_t>(spin)] = -gain;  // energy has -μ Σ h σ
  }
  for (const auto& [pair, strength] : total.quadratic) {
    if (strength != 0.0) {
      model.couplings.push_back(Coupling{pair.first, pair.second, -strength});
    }
  }
  model.validate();
  return EncodedProblem{std::move(model), std::move(certificate)};
}

std::vector<bool> decode_assignment(const ReductionCertificate& certificate,
                                    const SpinConfiguration& config) {
  if (config.size() != certificate.total_spins()) {
    throw InvalidInputError("decode_assignment: configuration length " +
                            std::to_string(config.size()) + " does not match encoded model (" +
                            std::to_string(certificate.total_spins()) + " spins)");
  }
  config.validate();
  std::vector<bool> assignment(certificate.variable_to_spin.size());
  for (std::size_t v = 0; v < certificate.variable_to_spin.size(); ++v) {
    const int spin = certificate.variable_to_spin[v];
    assignment[v] = config.spins[static_cast<std::size_t>(spin)] == +1;
  }
  return assignment;
}

}  // namespace collapsim::ising
