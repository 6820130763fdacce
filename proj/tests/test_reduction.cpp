#include <doctest.h>

#include <algorithm>
#include <random>

#include "collapsim/errors.hpp"
#include "collapsim/ground_state.hpp"
#include "collapsim/sat_reduction.hpp"
#include "oracles.hpp"

using collapsim::InvalidInputError;
using collapsim::ising::Clause;
using collapsim::ising::CnfFormula;
using collapsim::ising::decode_assignment;
using collapsim::ising::encode_3sat;
using collapsim::ising::IsingModel;
using collapsim::ising::SpinConfiguration;

namespace {

CnfFormula unsat_eight_clauses() {
  // Every sign pattern over three variables: no assignment satisfies all.
  CnfFormula cnf;
  cnf.num_vars = 3;
  for (int mask = 0; mask < 8; ++mask) {
    Clause clause;
    for (int l = 0; l < 3; ++l) {
      clause.literals[static_cast<std::size_t>(l)] = (mask >> l) & 1 ? -(l + 1) : (l + 1);
    }
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

// Minimum energy over the clause ancillas for a fixed variable assignment.
double min_over_ancillas(const IsingModel& model, const std::vector<bool>& assignment,
                         int num_vars) {
  const int num_anc = model.num_spins - num_vars;
  double best = 0.0;
  for (std::uint64_t anc = 0; anc < (std::uint64_t{1} << num_anc); ++anc) {
    SpinConfiguration config;
    config.spins.resize(static_cast<std::size_t>(model.num_spins));
    for (int v = 0; v < num_vars; ++v) {
      config.spins[static_cast<std::size_t>(v)] = assignment[static_cast<std::size_t>(v)] ? +1 : -1;
    }
    for (int a = 0; a < num_anc; ++a) {
      config.spins[static_cast<std::size_t>(num_vars + a)] = (anc >> a) & 1 ? -1 : +1;
    }
    const double e = classical_energy(model, config);
    if (anc == 0 || e < best) best = e;
  }
  return best;
}

}  // namespace

TEST_CASE("tautological clause encodes to ground energy 0") {
  CnfFormula cnf;
  cnf.num_vars = 2;
  cnf.clauses = {Clause{{1, -1, 2}}};
  const auto encoded = encode_3sat(cnf);
  CHECK(encoded.model.num_spins == 3);
  const auto ground = collapsim::solver::brute_force_ground_state(encoded.model);
  CHECK(ground.ground_energy == 0.0);
}

TEST_CASE("single clause is satisfiable with ground energy 0") {
  CnfFormula cnf;
  cnf.num_vars = 3;
  cnf.clauses = {Clause{{1, 2, 3}}};
  const auto encoded = encode_3sat(cnf);

  // brute force over all variable assignments x ancillas via the oracle
  const auto oracle = oracles::enumerate_ground(encoded.model);
  CHECK(oracle.energy == 0.0);

  const auto ground = collapsim::solver::brute_force_ground_state(encoded.model);
  CHECK(ground.ground_energy == 0.0);
  const auto assignment = decode_assignment(encoded.certificate, ground.witnesses.front());
  CHECK(cnf.satisfied_by(assignment));
}

TEST_CASE("eight-clause UNSAT corpus has ground energy >= 1") {
  const CnfFormula cnf = unsat_eight_clauses();
  REQUIRE_FALSE(oracles::sat_oracle(cnf));
  const auto encoded = encode_3sat(cnf);
  const auto ground = collapsim::solver::brute_force_ground_state(encoded.model);
  CHECK(ground.ground_energy >= encoded.certificate.penalty_unit);
}

TEST_CASE("gadget pointwise property: ancilla minimum counts violated clauses") {
  std::mt19937_64 gen(404);
  for (int trial = 0; trial < 25; ++trial) {
    const int num_vars = 2 + static_cast<int>(gen() % 3);   // 2..4
    const int num_clauses = 1 + static_cast<int>(gen() % 4);  // 1..4
    const CnfFormula cnf = oracles::random_cnf(gen, num_vars, num_clauses);
    const auto encoded = encode_3sat(cnf);
    REQUIRE(encoded.model.num_spins == num_vars + num_clauses);

    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << num_vars); ++bits) {
      std::vector<bool> assignment(static_cast<std::size_t>(num_vars));
      for (int v = 0; v < num_vars; ++v) assignment[static_cast<std::size_t>(v)] = (bits >> v) & 1;
      const double expected = cnf.unsatisfied_count(assignment);
      CHECK(min_over_ancillas(encoded.model, assignment, num_vars) == expected);
    }
  }
}

TEST_CASE("padded clauses keep the gadget exact") {
  // (x1 v x1 v x2): the padded duplicate literal squares away
  CnfFormula cnf;
  cnf.num_vars = 2;
  cnf.clauses = {Clause{{1, 1, 2}}};
  const auto encoded = encode_3sat(cnf);
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    const std::vector<bool> assignment{static_cast<bool>(bits & 1),
                                       static_cast<bool>(bits >> 1)};
    const double expected = cnf.unsatisfied_count(assignment);
    CHECK(min_over_ancillas(encoded.model, assignment, 2) == expected);
  }
}

TEST_CASE("reduction soundness and completeness against the SAT oracle") {
  std::mt19937_64 gen(2024);
  int satisfiable_seen = 0, unsatisfiable_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int num_vars = 2 + static_cast<int>(gen() % 7);      // 2..8
    const int num_clauses = 1 + static_cast<int>(gen() % 12);  // 1..12
    const CnfFormula cnf = oracles::random_cnf(gen, num_vars, num_clauses);
    const auto encoded = encode_3sat(cnf);
    const auto outcome = collapsim::solver::solve_pi0(encoded.model);
    const bool expected = oracles::sat_oracle(cnf);
    REQUIRE(outcome.answer == expected);
    (expected ? satisfiable_seen : unsatisfiable_seen)++;
    if (expected) {
      REQUIRE(outcome.verified);
      const auto assignment = decode_assignment(encoded.certificate, *outcome.witness);
      REQUIRE(cnf.satisfied_by(assignment));
    }
  }
  // the corpus must exercise both answers
  CHECK(satisfiable_seen > 0);
  CHECK(unsatisfiable_seen > 0);
}

TEST_CASE("decode on a clause-free formula accepts any configuration") {
  CnfFormula cnf;
  cnf.num_vars = 3;
  const auto encoded = encode_3sat(cnf);
  CHECK(encoded.model.num_spins == 3);
  const auto assignment =
      decode_assignment(encoded.certificate, SpinConfiguration{{+1, -1, +1}});
  CHECK(assignment == std::vector<bool>{true, false, true});
}

TEST_CASE("encode-decode round trip on a two-clause formula") {
  CnfFormula cnf;
  cnf.num_vars = 3;
  cnf.clauses = {Clause{{1, 2, 3}}, Clause{{-1, 2, 3}}};
  const auto encoded = encode_3sat(cnf);
  const auto ground = collapsim::solver::brute_force_ground_state(encoded.model);
  CHECK(ground.ground_energy == 0.0);
  for (const auto& witness : ground.witnesses) {
    CHECK(cnf.satisfied_by(decode_assignment(encoded.certificate, witness)));
  }
}

TEST_CASE("certificate structure: injective map, disjoint ancillas, linear size") {
  std::mt19937_64 gen(77);
  const CnfFormula cnf = oracles::random_cnf(gen, 5, 7);
  const auto encoded = encode_3sat(cnf);
  const auto& cert = encoded.certificate;

  CHECK(encoded.model.num_spins == cnf.num_vars + static_cast<int>(cnf.clauses.size()));
  CHECK(cert.num_variables() == cnf.num_vars);
  CHECK(static_cast<int>(cert.ancilla_spins.size()) == static_cast<int>(cnf.clauses.size()));

  std::vector<int> seen = cert.variable_to_spin;
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  for (int anc : cert.ancilla_spins) {
    CHECK(std::find(cert.variable_to_spin.begin(), cert.variable_to_spin.end(), anc) ==
          cert.variable_to_spin.end());
  }
}

TEST_CASE("decode rejects mismatched configuration length") {
  CnfFormula cnf;
  cnf.num_vars = 2;
  cnf.clauses = {Clause{{1, 2, 2}}};
  const auto encoded = encode_3sat(cnf);
  CHECK_THROWS_AS(decode_assignment(encoded.certificate, SpinConfiguration{{+1, +1}}),
                  InvalidInputError);
}
