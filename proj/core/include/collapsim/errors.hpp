#pragma once

#include <stdexcept>
#include <string>

namespace collapsim {

/// A caller-supplied value violated an operation's preconditions.
class InvalidInputError : public std::runtime_error {
public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested computation exceeds a configured size limit.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (DIMACS, model documents, configs).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace collapsim
