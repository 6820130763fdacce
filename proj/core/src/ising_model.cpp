#include "collapsim/ising_model.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "collapsim/errors.hpp"

namespace collapsim::ising {

void IsingModel::validate() const {
  if (num_spins < 1) throw InvalidInputError("IsingModel: num_spins must be >= 1");
  if (static_cast<int>(fields.size()) != num_spins) {
    throw InvalidInputError("IsingModel: fields must have exactly num_spins entries");
  }
  for (double h : fields) {
    if (!std::isfinite(h)) throw InvalidInputError("IsingModel: fields must be finite");
  }
  if (!std::isfinite(moment) || !std::isfinite(offset)) {
    throw InvalidInputError("IsingModel: moment and offset must be finite");
  }
  std::set<std::pair<int, int>> seen;
  for (const Coupling& c : couplings) {
    if (c.j < 0 || c.k >= num_spins || c.j >= c.k) {
      throw InvalidInputError("IsingModel: coupling (" + std::to_string(c.j) + "," +
                              std::to_string(c.k) + ") must satisfy 0 <= j < k < num_spins");
    }
    if (!std::isfinite(c.strength)) {
      throw InvalidInputError("IsingModel: coupling strengths must be finite");
    }
    if (!seen.insert({c.j, c.k}).second) {
      throw InvalidInputError("IsingModel: duplicate coupling pair (" + std::to_string(c.j) +
                              "," + std::to_string(c.k) + ")");
    }
  }
}

SpinConfiguration SpinConfiguration::from_bits(std::uint64_t bits, int num_spins) {
  SpinConfiguration config;
  config.spins.resize(static_cast<std::size_t>(num_spins));
  for (int j = 0; j < num_spins; ++j) {
    const std::uint64_t bit = (bits >> (num_spins - 1 - j)) & 1u;
    config.spins[static_cast<std::size_t>(j)] = bit ? -1 : +1;
  }
  return config;
}

std::uint64_t SpinConfiguration::to_bits() const {
  std::uint64_t bits = 0;
  for (int j = 0; j < size(); ++j) {
    bits <<= 1;
    if (spins[static_cast<std::size_t>(j)] == -1) bits |= 1u;
  }
  return bits;
}

void SpinConfiguration::validate() const {
  for (int s : spins) {
    if (s != -1 && s != 1) {
      throw InvalidInputError("SpinConfiguration: entries must be exactly -1 or +1");
    }
  }
}

double classical_energy(const IsingModel& model, const SpinConfiguration& config) {
  if (config.size() != model.num_spins) {
    throw InvalidInputError("classical_energy: configuration length " +
                            std::to_string(config.size()) + " does not match num_spins " +
                            std::to_string(model.num_spins));
  }
  double energy = model.offset;
  for (const Coupling& c : model.couplings) {
    energy -= c.strength * config.spins[static_cast<std::size_t>(c.j)] *
              config.spins[static_cast<std::size_t>(c.k)];
  }
  for (int j = 0; j < model.num_spins; ++j) {
    energy -= model.moment * model.fields[static_cast<std::size_t>(j)] *
              config.spins[static_cast<std::size_t>(j)];
  }
  return energy;
}

hilbert::DiagonalOperator build_quantum_diagonal(const IsingModel& model,
                                                 const Capacity& capacity) {
  model.validate();
  if (model.num_spins > capacity.max_quantum_spins) {
    throw CapacityError("build_quantum_diagonal: " + std::to_string(model.num_spins) +
                        " spins exceed the " + std::to_string(capacity.max_quantum_spins) +
                        "-spin limit");
  }
  const std::uint64_t dim = std::uint64_t{1} << model.num_spins;
  std::vector<double> energies(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    energies[b] = classical_energy(model, SpinConfiguration::from_bits(b, model.num_spins));
  }
  return hilbert::DiagonalOperator::from_energies(std::move(energies));
}

}  // namespace collapsim::ising
