#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "collapsim/collapse.hpp"

namespace collapsim::io {

enum class Subcommand { Encode, Solve, Spectrum, Verify, Bench, Collapse, Sweep, Feasibility };

/// csv: key-value text for single-result reports, comma-separated rows for
/// tables. json: everything as a JSON document.
enum class ReportFormat { Csv, Json };

const char* subcommand_name(Subcommand s);
const char* format_name(ReportFormat f);

/// Everything one invocation needs; round-trips through JSON unchanged.
struct RunManifest {
  Subcommand subcommand = Subcommand::Solve;

  std::string cnf_path;
  std::string model_path;
  std::string certificate_path;
  std::string state_path;
  std::string config_path;
  std::string output_path;         // empty: report goes to stdout
  std::string witness_state_path;  // solve: write the witness basis state here

  std::uint64_t seed = 0;
  bool seed_overridden = false;  // seed flag given, takes precedence over config
  ReportFormat format = ReportFormat::Csv;
  bool timestamp = true;

  double threshold = 0.0;   // solve
  double energy = 0.0;      // verify
  double tolerance = 1e-8;  // verify
  int n_min = 16;           // bench
  int n_max = 26;
  int repetitions = 3;
  int threads = 1;
  std::uint64_t samples = 0;     // collapse/sweep; 0: use the config value
  std::vector<double> tau_grid;  // sweep
  double log2_ops = 0.0;         // feasibility
  double budget_years = 1.0;
  int lowest = 32;     // spectrum: eigenvalues to report
  bool dense = false;  // spectrum: force dense diagonalization of the lift

  bool operator==(const RunManifest&) const = default;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

/// Collapse experiment configuration document (JSON):
/// {n, coefficients (optional [re, im] pairs; default equal amplitudes),
///  estimates, tau, hbar, samples, seed, formula}.
struct CollapseConfig {
  collapse::TestParticle particle;
  collapse::EnvironmentSpec spec;
  std::uint64_t samples = 10000;
  collapse::AverageFormula formula = collapse::AverageFormula::ProductSinc;
};

CollapseConfig parse_collapse_config(const std::string& text);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitVerification = 4;

/// Dispatch a manifest: reads the referenced files, runs the module
/// operation, writes the report to manifest.output_path (or `out`), and
/// returns an exit code per the table above. Failures produce a one-line
/// diagnostic on `err` naming the failing stage.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

}  // namespace collapsim::io
