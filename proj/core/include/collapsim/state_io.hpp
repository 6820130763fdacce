#pragma once

#include <iosfwd>

#include "collapsim/state_vector.hpp"

namespace collapsim::io {

/// Binary state-vector format: for each basis index in ascending order, the
/// real then the imaginary part as little-endian binary64 (16 bytes per
/// amplitude, no header; the dimension is the file size / 16).
void write_state(std::ostream& out, const hilbert::StateVector& state);
hilbert::StateVector read_state(std::istream& in);

}  // namespace collapsim::io
