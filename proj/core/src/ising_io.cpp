#include "collapsim/ising_io.hpp"

#include <json.hpp>

#include "collapsim/errors.hpp"

namespace collapsim::io {

namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& doc, const char* name, const char* what) {
  if (!doc.contains(name)) {
    throw ParseError(std::string(what) + ": missing field '" + name + "'");
  }
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string(what) + ": field '" + name + "' has the wrong type");
  }
}

}  // namespace

std::string serialize_ising(const ising::IsingModel& model) {
  json doc;
  doc["num_spins"] = model.num_spins;
  json couplings = json::array();
  for (const ising::Coupling& c : model.couplings) {
    couplings.push_back(json::array({c.j, c.k, c.strength}));
  }
  doc["couplings"] = std::move(couplings);
  doc["fields"] = model.fields;
  doc["moment"] = model.moment;
  doc["offset"] = model.offset;
  return doc.dump(2) + "\n";
}

ising::IsingModel parse_ising(const std::string& text) {
  const json doc = parse_document(text, "ising model");
  ising::IsingModel model;
  model.num_spins = field<int>(doc, "num_spins", "ising model");
  model.fields = field<std::vector<double>>(doc, "fields", "ising model");
  model.moment = field<double>(doc, "moment", "ising model");
  model.offset = field<double>(doc, "offset", "ising model");

  const json couplings = field<json>(doc, "couplings", "ising model");
  if (!couplings.is_array()) throw ParseError("ising model: 'couplings' must be an array");
  for (const json& entry : couplings) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ParseError("ising model: each coupling must be a [j, k, J] triple");
    }
    try {
      model.couplings.push_back(
          {entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
    } catch (const json::exception&) {
      throw ParseError("ising model: coupling entries must be [int, int, number]");
    }
  }
  try {
    model.validate();
  } catch (const InvalidInputError& e) {
    throw ParseError(std::string("ising model: ") + e.what());
  }
  return model;
}

std::string serialize_certificate(const ising::ReductionCertificate& certificate) {
  json doc;
  doc["variable_to_spin"] = certificate.variable_to_spin;
  doc["ancilla_spins"] = certificate.ancilla_spins;
  doc["penalty_unit"] = certificate.penalty_unit;
  return doc.dump(2) + "\n";
}

ising::ReductionCertificate parse_certificate(const std::string& text) {
  const json doc = parse_document(text, "certificate");
  ising::ReductionCertificate certificate;
  certificate.variable_to_spin =
      field<std::vector<int>>(doc, "variable_to_spin", "certificate");
  certificate.ancilla_spins = field<std::vector<int>>(doc, "ancilla_spins", "certificate");
  certificate.penalty_unit = field<double>(doc, "penalty_unit", "certificate");
  return certificate;
}

}  // namespace collapsim::io
