#pragma once

#include <string>

#include "collapsim/ising_model.hpp"
#include "collapsim/sat_reduction.hpp"

namespace collapsim::io {

/// Model document schema (JSON): num_spins, couplings as an array of
/// [j, k, J] triples, fields, moment, offset. Numeric output uses shortest
/// round-trip rendering, so parse(serialize(m)) reproduces every binary64
/// value bit-exactly.
std::string serialize_ising(const ising::IsingModel& model);
ising::IsingModel parse_ising(const std::string& text);

/// Certificate document: variable_to_spin, ancilla_spins, penalty_unit.
std::string serialize_certificate(const ising::ReductionCertificate& certificate);
ising::ReductionCertificate parse_certificate(const std::string& text);

}  // namespace collapsim::io
