#pragma once

#include <iosfwd>
#include <string>

#include "collapsim/cnf.hpp"

namespace collapsim::io {

/// DIMACS CNF reader: 'c' comment lines, 'p cnf <vars> <clauses>' header,
/// zero-terminated clauses. Clauses with fewer than 3 literals are padded by
/// repeating the last literal; more than 3 literals is a parse error. Errors
/// carry the offending line number.
ising::CnfFormula parse_dimacs(std::istream& in);
ising::CnfFormula parse_dimacs(const std::string& text);

std::string serialize_dimacs(const ising::CnfFormula& cnf);

}  // namespace collapsim::io
