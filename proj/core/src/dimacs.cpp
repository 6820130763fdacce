#include "collapsim/dimacs.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>
#include <vector>

#include "collapsim/errors.hpp"

namespace collapsim::io {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("dimacs line " + std::to_string(line) + ": " + what);
}

}  // namespace

ising::CnfFormula parse_dimacs(std::istream& in) {
  ising::CnfFormula cnf;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  int line_number = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;

    if (line[0] == 'p') {
      if (have_header) fail(line_number, "duplicate header");
      std::istringstream header(line);
      std::string p, format;
      header >> p >> format >> cnf.num_vars >> declared_clauses;
      if (header.fail() || format != "cnf" || cnf.num_vars < 1 || declared_clauses < 0) {
        fail(line_number, "malformed header (expected 'p cnf <vars> <clauses>')");
      }
      have_header = true;
      continue;
    }

    if (!have_header) fail(line_number, "clause before 'p cnf' header");

    std::istringstream tokens(line);
    int literal = 0;
    while (tokens >> literal) {
      if (literal == 0) {
        if (pending.empty()) fail(line_number, "empty clause");
        if (pending.size() > 3) {
          fail(line_number, "clause with " + std::to_string(pending.size()) +
                                " literals (at most 3 supported)");
        }
        while (pending.size() < 3) pending.push_back(pending.back());  // pad by repetition
        cnf.clauses.push_back(ising::Clause{{pending[0], pending[1], pending[2]}});
        pending.clear();
        continue;
      }
      if (std::abs(literal) > cnf.num_vars) {
        fail(line_number, "literal " + std::to_string(literal) + " out of range [1, " +
                              std::to_string(cnf.num_vars) + "]");
      }
      pending.push_back(literal);
    }
    if (!tokens.eof()) fail(line_number, "unexpected token");
  }

  if (!have_header) fail(line_number, "missing 'p cnf' header");
  if (!pending.empty()) fail(line_number, "unterminated clause (missing trailing 0)");
  if (static_cast<int>(cnf.clauses.size()) != declared_clauses) {
    throw ParseError("dimacs: header declares " + std::to_string(declared_clauses) +
                     " clauses but " + std::to_string(cnf.clauses.size()) + " were read");
  }
  cnf.validate();
  return cnf;
}

ising::CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const ising::CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const ising::Clause& clause : cnf.clauses) {
    out << clause.literals[0] << ' ' << clause.literals[1] << ' ' << clause.literals[2]
        << " 0\n";
  }
  return out.str();
}

}  // namespace collapsim::io
