// collapsim: spin-glass ground-state decisions, exact small-system spectra,
// exponential-scaling benchmarks, and stochastic dephasing experiments from
// one command line.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "collapsim/errors.hpp"
#include "collapsim/harness.hpp"

namespace {

using collapsim::io::ReportFormat;
using collapsim::io::RunManifest;
using collapsim::io::Subcommand;

// "a:b:count" for a linspace, otherwise a comma-separated value list.
std::vector<double> parse_tau_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double lo = 0, hi = 0;
    long count = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld", &lo, &hi, &count) != 3 || count < 1) {
      throw collapsim::ParseError("sweep: --tau-grid expects 'min:max:count' or a comma list");
    }
    for (long i = 0; i < count; ++i) {
      grid.push_back(count == 1 ? lo
                                : lo + (hi - lo) * static_cast<double>(i) /
                                           static_cast<double>(count - 1));
    }
    return grid;
  }
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    try {
      grid.push_back(std::stod(text.substr(begin, end - begin)));
    } catch (const std::exception&) {
      throw collapsim::ParseError("sweep: bad --tau-grid value '" +
                                  text.substr(begin, end - begin) + "'");
    }
    begin = end + 1;
    if (end == text.size()) break;
  }
  return grid;
}

void add_report_flags(CLI::App* cmd, RunManifest& manifest, std::string& format) {
  cmd->add_option("--out", manifest.output_path, "Write the report to this file");
  cmd->add_option("--format", format, "Report format: csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag_callback(
      "--no-timestamp", [&manifest] { manifest.timestamp = false; },
      "Suppress the timestamp header for byte-reproducible output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising ground-state laboratory and environment-dephasing simulator"};
  app.require_subcommand(1);

  RunManifest manifest;
  std::string format = "csv";
  std::string tau_grid_text;

  auto* encode = app.add_subcommand("encode", "Reduce a DIMACS 3-SAT file to an Ising model");
  encode->add_option("--cnf", manifest.cnf_path, "DIMACS CNF input")->required();
  encode->add_option("--out", manifest.output_path, "Ising model output document")->required();
  encode->add_option("--cert", manifest.certificate_path,
                     "Also write the reduction certificate here");
  encode->add_option("--format", format, "Report format: csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  encode->add_flag_callback(
      "--no-timestamp", [&manifest] { manifest.timestamp = false; },
      "Suppress the timestamp header");

  auto* solve = app.add_subcommand("solve", "Decide whether the ground energy meets the threshold");
  solve->add_option("--model", manifest.model_path, "Ising model document")->required();
  solve->add_option("--threshold", manifest.threshold, "Energy threshold (default 0)");
  solve->add_option("--cert", manifest.certificate_path,
                    "Reduction certificate: decode the witness into an assignment");
  solve->add_option("--witness-state-out", manifest.witness_state_path,
                    "Write the witness basis state (binary) here");
  solve->add_option("--threads", manifest.threads, "Worker threads (0: all cores)");
  add_report_flags(solve, manifest, format);

  auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum of the lifted Ising Hamiltonian");
  spectrum->add_option("--model", manifest.model_path, "Ising model document")->required();
  spectrum->add_option("--lowest", manifest.lowest,
                       "How many eigenvalues to report (0: all; default 32)");
  spectrum->add_flag("--dense", manifest.dense,
                     "Diagonalize the dense embedding instead of reading the diagonal");
  add_report_flags(spectrum, manifest, format);

  auto* verify = app.add_subcommand("verify", "Residual-check a candidate eigenpair");
  verify->add_option("--model", manifest.model_path, "Ising model document")->required();
  verify->add_option("--state", manifest.state_path, "Binary state-vector file")->required();
  verify->add_option("--energy", manifest.energy, "Candidate eigenvalue")->required();
  verify->add_option("--tol", manifest.tolerance, "Residual tolerance (default 1e-8)");
  add_report_flags(verify, manifest, format);

  auto* bench = app.add_subcommand("bench", "Time exhaustive ground-state search over a range of N");
  bench->add_option("--n-min", manifest.n_min, "Smallest N (default 16)");
  bench->add_option("--n-max", manifest.n_max, "Largest N (default 26)");
  bench->add_option("--seed", manifest.seed, "Instance seed");
  bench->add_option("--reps", manifest.repetitions, "Repetitions per N, best kept (default 3)");
  bench->add_option("--threads", manifest.threads, "Worker threads (0: all cores)");
  add_report_flags(bench, manifest, format);

  auto* collapse = app.add_subcommand("collapse", "Monte Carlo transition-probability experiment");
  collapse->add_option("--config", manifest.config_path, "Experiment config (JSON)")->required();
  collapse->add_option("--samples", manifest.samples, "Override the config sample count");
  auto* collapse_seed = collapse->add_option("--seed", manifest.seed, "Override the config seed");
  collapse->add_option("--threads", manifest.threads, "Worker threads (0: all cores)");
  add_report_flags(collapse, manifest, format);

  auto* sweep = app.add_subcommand("sweep", "Transition probability versus interaction time");
  sweep->add_option("--config", manifest.config_path, "Experiment config (JSON)")->required();
  sweep->add_option("--tau-grid", tau_grid_text, "'min:max:count' or comma list")->required();
  sweep->add_option("--samples", manifest.samples, "Override the config sample count");
  auto* sweep_seed = sweep->add_option("--seed", manifest.seed, "Override the config seed");
  sweep->add_option("--threads", manifest.threads, "Worker threads (0: all cores)");
  add_report_flags(sweep, manifest, format);

  auto* feasibility = app.add_subcommand("feasibility", "Seconds-per-operation budget arithmetic");
  feasibility->add_option("--log2-ops", manifest.log2_ops, "log2 of the operation count")
      ->required();
  feasibility->add_option("--budget-years", manifest.budget_years,
                          "Wall-clock budget in years (default 1)");
  add_report_flags(feasibility, manifest, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return collapsim::io::kExitParse;
  }

  manifest.format = format == "json" ? ReportFormat::Json : ReportFormat::Csv;
  manifest.seed_overridden = collapse_seed->count() > 0 || sweep_seed->count() > 0;

  if (encode->parsed()) manifest.subcommand = Subcommand::Encode;
  if (solve->parsed()) manifest.subcommand = Subcommand::Solve;
  if (spectrum->parsed()) manifest.subcommand = Subcommand::Spectrum;
  if (verify->parsed()) manifest.subcommand = Subcommand::Verify;
  if (bench->parsed()) manifest.subcommand = Subcommand::Bench;
  if (collapse->parsed()) manifest.subcommand = Subcommand::Collapse;
  if (sweep->parsed()) manifest.subcommand = Subcommand::Sweep;
  if (feasibility->parsed()) manifest.subcommand = Subcommand::Feasibility;

  if (sweep->parsed()) {
    try {
      manifest.tau_grid = parse_tau_grid(tau_grid_text);
    } catch (const collapsim::ParseError& e) {
      std::cerr << e.what() << '\n';
      return collapsim::io::kExitParse;
    }
  }

  return collapsim::io::run(manifest, std::cout, std::cerr);
}
