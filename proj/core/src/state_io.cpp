#include "collapsim/state_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>

#include "collapsim/errors.hpp"

namespace collapsim::io {

namespace {

void put_le_double(std::ostream& out, double value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

bool get_le_double(std::istream& in, double& value) {
  std::array<char, 8> bytes;
  in.read(bytes.data(), bytes.size());
  if (in.gcount() == 0) return false;
  if (in.gcount() != 8) throw ParseError("state file: truncated amplitude");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
  }
  value = std::bit_cast<double>(bits);
  return true;
}

}  // namespace

void write_state(std::ostream& out, const hilbert::StateVector& state) {
  for (const auto& amplitude : state.amplitudes) {
    put_le_double(out, amplitude.real());
    put_le_double(out, amplitude.imag());
  }
  if (!out) throw ParseError("state file: write failed");
}

hilbert::StateVector read_state(std::istream& in) {
  hilbert::StateVector state;
  double re = 0.0, im = 0.0;
  while (get_le_double(in, re)) {
    if (!get_le_double(in, im)) throw ParseError("state file: odd number of binary64 values");
    state.amplitudes.emplace_back(re, im);
  }
  if (state.amplitudes.empty()) throw ParseError("state file: empty");
  return state;
}

}  // namespace collapsim::io
