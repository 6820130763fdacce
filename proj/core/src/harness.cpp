#include "collapsim/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "collapsim/capacity.hpp"
#include "collapsim/dimacs.hpp"
#include "collapsim/errors.hpp"
#include "collapsim/feasibility.hpp"
#include "collapsim/ground_state.hpp"
#include "collapsim/ising_io.hpp"
#include "collapsim/scaling.hpp"
#include "collapsim/spectrum.hpp"
#include "collapsim/state_io.hpp"

namespace collapsim::io {

using nlohmann::json;

namespace {

constexpr const char* kSubcommandNames[] = {"encode", "solve",    "spectrum", "verify",
                                            "bench",  "collapse", "sweep",    "feasibility"};

std::string read_file(const std::string& path, const char* stage) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(std::string(stage) + ": cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

/// Shortest representation that re-parses to the same binary64.
std::string number(double value) { return json(value).dump(); }

// Assembles one report in both output styles: ordered key/value fields plus
// an optional table. csv renders "key = value" lines and comma-separated
// rows; json renders one document.
class Report {
public:
  Report(const RunManifest& manifest, Subcommand subcommand)
      : format_(manifest.format), timestamp_(manifest.timestamp), subcommand_(subcommand) {}

  void add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    doc_[key] = value;
  }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, double value) {
    fields_.emplace_back(key, number(value));
    doc_[key] = value;
  }
  void add(const std::string& key, std::uint64_t value) {
    fields_.emplace_back(key, std::to_string(value));
    doc_[key] = value;
  }
  void add(const std::string& key, int value) {
    fields_.emplace_back(key, std::to_string(value));
    doc_[key] = value;
  }
  void add(const std::string& key, bool value) {
    fields_.emplace_back(key, value ? "true" : "false");
    doc_[key] = value;
  }

  void table_header(std::vector<std::string> columns) { columns_ = std::move(columns); }
  void table_row(const std::vector<json>& cells) {
    rows_.push_back(cells);
  }

  /// Summary line rendered after the table in csv mode (a plain field in json).
  void trailer(const std::string& key, const std::string& value) {
    trailers_.emplace_back(key, value);
    doc_[key] = value;
  }
  void trailer(const std::string& key, double value) {
    trailers_.emplace_back(key, number(value));
    doc_[key] = value;
  }

  void write(std::ostream& out) const {
    if (format_ == ReportFormat::Json) {
      json doc = doc_;
      if (timestamp_) doc["generated_at"] = iso_timestamp();
      doc["subcommand"] = kSubcommandNames[static_cast<int>(subcommand_)];
      if (!columns_.empty()) {
        json rows = json::array();
        for (const auto& row : rows_) {
          json entry;
          for (std::size_t c = 0; c < columns_.size(); ++c) entry[columns_[c]] = row[c];
          rows.push_back(std::move(entry));
        }
        doc["rows"] = std::move(rows);
      }
      out << doc.dump(2) << '\n';
      return;
    }
    if (timestamp_) {
      out << "# collapsim " << kSubcommandNames[static_cast<int>(subcommand_)] << ' '
          << iso_timestamp() << '\n';
    }
    // With a table present, metadata becomes comment lines so the CSV loads
    // straight into plotting tools.
    const char* prefix = columns_.empty() ? "" : "# ";
    for (const auto& [key, value] : fields_) out << prefix << key << " = " << value << '\n';
    if (!columns_.empty()) {
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        out << (c ? "," : "") << columns_[c];
      }
      out << '\n';
      for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "," : "")
              << (row[c].is_string() ? row[c].get<std::string>() : row[c].dump());
        }
        out << '\n';
      }
    }
    for (const auto& [key, value] : trailers_) out << key << ',' << value << '\n';
  }

private:
  ReportFormat format_;
  bool timestamp_;
  Subcommand subcommand_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::pair<std::string, std::string>> trailers_;
  json doc_ = json::object();
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

void emit(const Report& report, const RunManifest& manifest, std::ostream& out,
          const char* stage) {
  if (manifest.output_path.empty()) {
    report.write(out);
    return;
  }
  std::ofstream file(manifest.output_path, std::ios::binary);
  if (!file) {
    throw ParseError(std::string(stage) + ": cannot write '" + manifest.output_path + "'");
  }
  report.write(file);
}

std::string spin_string(const ising::SpinConfiguration& config) {
  std::string text;
  text.reserve(config.spins.size());
  for (int s : config.spins) text.push_back(s == +1 ? '+' : '-');
  return text;
}

std::string assignment_string(const std::vector<bool>& assignment) {
  std::string text;
  text.reserve(assignment.size());
  for (bool b : assignment) text.push_back(b ? '1' : '0');
  return text;
}

ising::IsingModel load_model(const RunManifest& manifest, const char* stage) {
  if (manifest.model_path.empty()) {
    throw ParseError(std::string(stage) + ": --model is required");
  }
  return parse_ising(read_file(manifest.model_path, stage));
}

int run_encode(const RunManifest& manifest, std::ostream& out) {
  if (manifest.cnf_path.empty()) throw ParseError("encode: --cnf is required");
  if (manifest.output_path.empty()) throw ParseError("encode: --out is required");

  const ising::CnfFormula cnf = parse_dimacs(read_file(manifest.cnf_path, "encode"));
  const ising::EncodedProblem encoded = ising::encode_3sat(cnf);

  std::ofstream model_out(manifest.output_path, std::ios::binary);
  if (!model_out) throw ParseError("encode: cannot write '" + manifest.output_path + "'");
  model_out << serialize_ising(encoded.model);

  if (!manifest.certificate_path.empty()) {
    std::ofstream cert_out(manifest.certificate_path, std::ios::binary);
    if (!cert_out) {
      throw ParseError("encode: cannot write '" + manifest.certificate_path + "'");
    }
    cert_out << serialize_certificate(encoded.certificate);
  }

  RunManifest stdout_manifest = manifest;
  stdout_manifest.output_path.clear();
  Report report(stdout_manifest, Subcommand::Encode);
  report.add("num_vars", cnf.num_vars);
  report.add("num_clauses", static_cast<std::uint64_t>(cnf.clauses.size()));
  report.add("num_spins", encoded.model.num_spins);
  report.add("num_couplings", static_cast<std::uint64_t>(encoded.model.couplings.size()));
  report.add("penalty_unit", encoded.certificate.penalty_unit);
  report.add("model_path", manifest.output_path);
  report.write(out);
  return kExitOk;
}

int run_solve(const RunManifest& manifest, std::ostream& out) {
  const ising::IsingModel model = load_model(manifest, "solve");

  solver::BruteForceOptions options;
  options.threads = manifest.threads;
  options.capacity = Capacity::from_env();
  const solver::Restraint restraint{manifest.threshold, solver::Comparison::LessEqual};
  const solver::DecisionOutcome outcome = solver::solve_pi0(model, restraint, options);

  Report report(manifest, Subcommand::Solve);
  report.add("answer", outcome.answer);
  report.add("ground_energy", outcome.ground_energy);
  report.add("threshold", manifest.threshold);
  report.add("verified", outcome.verified);
  if (outcome.witness) {
    report.add("witness", spin_string(*outcome.witness));
    if (!manifest.certificate_path.empty()) {
      const auto certificate =
          parse_certificate(read_file(manifest.certificate_path, "solve"));
      report.add("assignment",
                 assignment_string(ising::decode_assignment(certificate, *outcome.witness)));
    }
    if (!manifest.witness_state_path.empty()) {
      if (model.num_spins > options.capacity.max_quantum_spins) {
        throw CapacityError("solve: witness state exceeds the Hilbert capacity");
      }
      std::ofstream state_out(manifest.witness_state_path, std::ios::binary);
      if (!state_out) {
        throw ParseError("solve: cannot write '" + manifest.witness_state_path + "'");
      }
      write_state(state_out, hilbert::StateVector::basis(std::size_t{1} << model.num_spins,
                                                         outcome.witness->to_bits()));
    }
  }
  emit(report, manifest, out, "solve");
  return kExitOk;
}

int run_spectrum(const RunManifest& manifest, std::ostream& out) {
  const ising::IsingModel model = load_model(manifest, "spectrum");
  const Capacity capacity = Capacity::from_env();
  const hilbert::DiagonalOperator lifted = ising::build_quantum_diagonal(model, capacity);

  solver::SpectrumResult spectrum;
  if (manifest.dense) {
    spectrum = solver::exact_spectrum(lifted.to_dense(), /*with_vectors=*/false, capacity);
  } else {
    spectrum = solver::exact_spectrum(lifted, /*with_vectors=*/false, capacity);
  }

  const std::size_t count =
      std::min<std::size_t>(spectrum.eigenvalues.size(),
                            manifest.lowest > 0 ? static_cast<std::size_t>(manifest.lowest)
                                                : spectrum.eigenvalues.size());
  Report report(manifest, Subcommand::Spectrum);
  report.add("dim", static_cast<std::uint64_t>(lifted.dim()));
  report.add("reported", static_cast<std::uint64_t>(count));
  report.add("route", manifest.dense ? "dense" : "diagonal");
  report.table_header({"index", "eigenvalue"});
  for (std::size_t i = 0; i < count; ++i) {
    report.table_row({json(static_cast<std::uint64_t>(i)), json(spectrum.eigenvalues[i])});
  }
  emit(report, manifest, out, "spectrum");
  return kExitOk;
}

int run_verify(const RunManifest& manifest, std::ostream& out) {
  const ising::IsingModel model = load_model(manifest, "verify");
  if (manifest.state_path.empty()) throw ParseError("verify: --state is required");

  const Capacity capacity = Capacity::from_env();
  const hilbert::DiagonalOperator lifted = ising::build_quantum_diagonal(model, capacity);

  std::ifstream state_in(manifest.state_path, std::ios::binary);
  if (!state_in) throw ParseError("verify: cannot open '" + manifest.state_path + "'");
  const hilbert::StateVector psi = read_state(state_in);
  if (psi.dim() != lifted.dim()) {
    throw InvalidInputError("verify: state dimension " + std::to_string(psi.dim()) +
                            " does not match operator dimension " +
                            std::to_string(lifted.dim()));
  }

  const double residual = solver::eigenpair_residual(lifted, psi, manifest.energy);
  const bool verified =
      solver::verify_eigenpair(lifted, psi, manifest.energy, manifest.tolerance);

  Report report(manifest, Subcommand::Verify);
  report.add("verified", verified);
  report.add("residual", residual);
  report.add("energy", manifest.energy);
  report.add("tolerance", manifest.tolerance);
  report.add("operations", static_cast<std::uint64_t>(lifted.dim()));  // diagonal matvec
  emit(report, manifest, out, "verify");
  return verified ? kExitOk : kExitVerification;
}

int run_bench(const RunManifest& manifest, std::ostream& out) {
  if (manifest.n_min < 1 || manifest.n_max < manifest.n_min) {
    throw InvalidInputError("bench: need 1 <= n-min <= n-max");
  }
  std::vector<int> range;
  for (int n = manifest.n_min; n <= manifest.n_max; ++n) range.push_back(n);

  solver::BruteForceOptions options;
  options.threads = manifest.threads;
  options.capacity = Capacity::from_env();
  const solver::ScalingResult result =
      solver::scaling_benchmark(range, manifest.seed, manifest.repetitions, options);

  Report report(manifest, Subcommand::Bench);
  report.table_header({"N", "wall_time_seconds", "configurations", "seed"});
  for (const solver::BenchRecord& record : result.records) {
    report.table_row({json(record.num_spins), json(record.wall_time),
                      json(record.configurations_enumerated), json(record.seed)});
  }
  if (result.fitted_slope) {
    report.trailer("slope", *result.fitted_slope);
  } else {
    report.trailer("slope", "absent");
  }
  emit(report, manifest, out, "bench");
  return kExitOk;
}

CollapseConfig load_collapse_config(const RunManifest& manifest, const char* stage) {
  if (manifest.config_path.empty()) {
    throw ParseError(std::string(stage) + ": --config is required");
  }
  CollapseConfig config = parse_collapse_config(read_file(manifest.config_path, stage));
  if (manifest.samples > 0) config.samples = manifest.samples;
  if (manifest.seed_overridden) config.spec.sampling_seed = manifest.seed;
  return config;
}

void add_analytics(Report& report, const CollapseConfig& config) {
  if (config.particle.equal_amplitudes()) {
    report.add("analytic_paper",
               collapse::analytic_transition(config.particle, config.spec,
                                             collapse::AverageFormula::PaperSinc));
    report.add("analytic_product",
               collapse::analytic_transition(config.particle, config.spec,
                                             collapse::AverageFormula::ProductSinc));
    report.add("born_limit", collapse::born_limit(config.particle));
  } else {
    // General amplitudes: the equal-amplitude analytics do not apply; report
    // the derived fully-dephased mean instead.
    report.add("dephased_mean", collapse::dephased_mean_overlap(config.particle));
  }
}

int run_collapse(const RunManifest& manifest, std::ostream& out) {
  const CollapseConfig config = load_collapse_config(manifest, "collapse");
  const collapse::TransitionStats stats = collapse::monte_carlo_transition(
      config.particle, config.spec, config.samples, manifest.threads);

  Report report(manifest, Subcommand::Collapse);
  report.add("n", static_cast<std::uint64_t>(config.particle.dim()));
  report.add("tau", config.spec.tau);
  report.add("hbar", config.spec.hbar);
  report.add("samples", stats.samples);
  report.add("seed", config.spec.sampling_seed);
  report.add("mean", stats.mean);
  report.add("variance", stats.variance);
  report.add("standard_error", stats.standard_error);
  add_analytics(report, config);
  emit(report, manifest, out, "collapse");
  return kExitOk;
}

int run_sweep(const RunManifest& manifest, std::ostream& out) {
  CollapseConfig config = load_collapse_config(manifest, "sweep");
  if (manifest.tau_grid.empty()) throw ParseError("sweep: --tau-grid is required");
  if (!config.particle.equal_amplitudes()) {
    throw InvalidInputError(
        "sweep: analytic columns require equal amplitudes (|c_j|^2 = 1/n)");
  }

  Report report(manifest, Subcommand::Sweep);
  report.add("n", static_cast<std::uint64_t>(config.particle.dim()));
  report.add("samples", config.samples);
  report.add("seed", config.spec.sampling_seed);
  report.table_header(
      {"tau", "mc_mean", "mc_stderr", "analytic_paper", "analytic_product", "born_limit"});
  for (double tau : manifest.tau_grid) {
    collapse::EnvironmentSpec spec = config.spec;
    spec.tau = tau;
    const collapse::TransitionStats stats = collapse::monte_carlo_transition(
        config.particle, spec, config.samples, manifest.threads);
    report.table_row(
        {json(tau), json(stats.mean), json(stats.standard_error),
         json(collapse::analytic_transition(config.particle, spec,
                                            collapse::AverageFormula::PaperSinc)),
         json(collapse::analytic_transition(config.particle, spec,
                                            collapse::AverageFormula::ProductSinc)),
         json(collapse::born_limit(config.particle))});
  }
  emit(report, manifest, out, "sweep");
  return kExitOk;
}

int run_feasibility(const RunManifest& manifest, std::ostream& out) {
  const double budget_seconds = manifest.budget_years * solver::kYearSeconds;
  const solver::FeasibilityReport result =
      solver::feasibility(manifest.log2_ops, budget_seconds);

  Report report(manifest, Subcommand::Feasibility);
  report.add("log2_ops", manifest.log2_ops);
  report.add("budget_years", manifest.budget_years);
  report.add("budget_seconds", budget_seconds);
  report.add("log10_seconds_per_op", result.log10_seconds_per_op);
  report.add("planck_log10", result.planck_log10);
  report.add("verdict", result.verdict == solver::Feasibility::SubPlanckInfeasible
                            ? "sub-Planck-infeasible"
                            : "feasible");
  emit(report, manifest, out, "feasibility");
  return kExitOk;
}

}  // namespace

const char* subcommand_name(Subcommand s) { return kSubcommandNames[static_cast<int>(s)]; }

const char* format_name(ReportFormat f) { return f == ReportFormat::Json ? "json" : "csv"; }

std::string manifest_to_json(const RunManifest& m) {
  json doc;
  doc["subcommand"] = subcommand_name(m.subcommand);
  doc["cnf_path"] = m.cnf_path;
  doc["model_path"] = m.model_path;
  doc["certificate_path"] = m.certificate_path;
  doc["state_path"] = m.state_path;
  doc["config_path"] = m.config_path;
  doc["output_path"] = m.output_path;
  doc["witness_state_path"] = m.witness_state_path;
  doc["seed"] = m.seed;
  doc["seed_overridden"] = m.seed_overridden;
  doc["format"] = format_name(m.format);
  doc["timestamp"] = m.timestamp;
  doc["threshold"] = m.threshold;
  doc["energy"] = m.energy;
  doc["tolerance"] = m.tolerance;
  doc["n_min"] = m.n_min;
  doc["n_max"] = m.n_max;
  doc["repetitions"] = m.repetitions;
  doc["threads"] = m.threads;
  doc["samples"] = m.samples;
  doc["tau_grid"] = m.tau_grid;
  doc["log2_ops"] = m.log2_ops;
  doc["budget_years"] = m.budget_years;
  doc["lowest"] = m.lowest;
  doc["dense"] = m.dense;
  return doc.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  try {
    RunManifest m;
    const std::string name = doc.at("subcommand").get<std::string>();
    bool found = false;
    for (int i = 0; i < 8; ++i) {
      if (name == kSubcommandNames[i]) {
        m.subcommand = static_cast<Subcommand>(i);
        found = true;
      }
    }
    if (!found) throw ParseError("manifest: unknown subcommand '" + name + "'");
    m.cnf_path = doc.at("cnf_path").get<std::string>();
    m.model_path = doc.at("model_path").get<std::string>();
    m.certificate_path = doc.at("certificate_path").get<std::string>();
    m.state_path = doc.at("state_path").get<std::string>();
    m.config_path = doc.at("config_path").get<std::string>();
    m.output_path = doc.at("output_path").get<std::string>();
    m.witness_state_path = doc.at("witness_state_path").get<std::string>();
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.seed_overridden = doc.at("seed_overridden").get<bool>();
    const std::string fmt = doc.at("format").get<std::string>();
    if (fmt == "json") {
      m.format = ReportFormat::Json;
    } else if (fmt == "csv") {
      m.format = ReportFormat::Csv;
    } else {
      throw ParseError("manifest: unknown format '" + fmt + "'");
    }
    m.timestamp = doc.at("timestamp").get<bool>();
    m.threshold = doc.at("threshold").get<double>();
    m.energy = doc.at("energy").get<double>();
    m.tolerance = doc.at("tolerance").get<double>();
    m.n_min = doc.at("n_min").get<int>();
    m.n_max = doc.at("n_max").get<int>();
    m.repetitions = doc.at("repetitions").get<int>();
    m.threads = doc.at("threads").get<int>();
    m.samples = doc.at("samples").get<std::uint64_t>();
    m.tau_grid = doc.at("tau_grid").get<std::vector<double>>();
    m.log2_ops = doc.at("log2_ops").get<double>();
    m.budget_years = doc.at("budget_years").get<double>();
    m.lowest = doc.at("lowest").get<int>();
    m.dense = doc.at("dense").get<bool>();
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
}

CollapseConfig parse_collapse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("collapse config: ") + e.what());
  }
  try {
    CollapseConfig config;
    const auto n = doc.at("n").get<std::size_t>();
    if (doc.contains("coefficients")) {
      std::vector<std::complex<double>> cs;
      for (const json& pair : doc.at("coefficients")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ParseError("collapse config: coefficients must be [re, im] pairs");
        }
        cs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
      }
      if (cs.size() != n) {
        throw ParseError("collapse config: coefficients length does not match n");
      }
      config.particle = collapse::TestParticle::from_coefficients(std::move(cs));
    } else {
      config.particle = collapse::TestParticle::equal_amplitude(n);
    }
    config.spec.estimates = doc.at("estimates").get<std::vector<double>>();
    config.spec.tau = doc.at("tau").get<double>();
    config.spec.hbar = doc.value("hbar", 1.0);
    config.spec.sampling_seed = doc.value("seed", std::uint64_t{0});
    config.samples = doc.value("samples", std::uint64_t{10000});
    const std::string formula = doc.value("formula", std::string("product-sinc"));
    if (formula == "paper-sinc") {
      config.formula = collapse::AverageFormula::PaperSinc;
    } else if (formula == "product-sinc") {
      config.formula = collapse::AverageFormula::ProductSinc;
    } else {
      throw ParseError("collapse config: unknown formula '" + formula + "'");
    }
    config.spec.validate();
    if (config.spec.dim() != config.particle.dim()) {
      throw ParseError("collapse config: estimates length does not match n");
    }
    return config;
  } catch (const json::exception& e) {
    throw ParseError(std::string("collapse config: ") + e.what());
  }
}

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  const char* stage = subcommand_name(manifest.subcommand);
  try {
    switch (manifest.subcommand) {
      case Subcommand::Encode:
        return run_encode(manifest, out);
      case Subcommand::Solve:
        return run_solve(manifest, out);
      case Subcommand::Spectrum:
        return run_spectrum(manifest, out);
      case Subcommand::Verify:
        return run_verify(manifest, out);
      case Subcommand::Bench:
        return run_bench(manifest, out);
      case Subcommand::Collapse:
        return run_collapse(manifest, out);
      case Subcommand::Sweep:
        return run_sweep(manifest, out);
      case Subcommand::Feasibility:
        return run_feasibility(manifest, out);
    }
    err << stage << ": unknown subcommand\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    err << stage << ": parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidInputError& e) {
    err << stage << ": invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapacityError& e) {
    err << stage << ": capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << stage << ": internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace collapsim::io
