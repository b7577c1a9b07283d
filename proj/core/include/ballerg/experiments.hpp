#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballerg/defaults.hpp"
#include "ballerg/dynamics.hpp"

// The experiment runner behind the CLI. Each catalog entry reproduces one
// quantitative result end to end, emits plot-ready trace.csv / report.json /
// summary.txt files into its own output directory, and declares bound checks
// whose pass/fail decides the exit status.
namespace ballerg {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string experiment;
  std::optional<Symbol> symbol;     // overrides the experiment's default symbol
  std::size_t dim_cap = defaults::kDimCap;
  double t = defaults::kSphereRadius;
  std::size_t count = defaults::kSphereCount;
  std::uint64_t seed = defaults::kSeed;
  std::string dictionary_path;      // optional JSON dictionary file
  int n_max = defaults::kTraceLength;
  double tol = defaults::kVerdictTol;
  std::string out_dir = "out";
  unsigned threads = 1;
};

// The experiment's tuned defaults (trace length etc. vary per experiment).
ExperimentConfig default_config(const std::string& experiment_id);

// Parses the JSON config text; unknown keys are rejected. Throws ConfigError
// on any problem (the CLI maps this to exit code 2).
ExperimentConfig config_from_json(const std::string& text);

// Applies the BALLERG_SEED environment override, when set.
void apply_env_overrides(ExperimentConfig& config);

struct BoundCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct NamedTrace {
  std::string slug;  // file stem; the first trace is written as trace.csv
  CesaroTrace trace;
};

struct ExperimentResult {
  std::string id;
  std::vector<BoundCheck> checks;
  std::vector<NamedTrace> traces;
  std::vector<std::string> notes;  // extra summary lines
  bool all_pass() const;
};

struct ExperimentInfo {
  std::string id;
  std::string checks_what;  // the result the experiment verifies
};

const std::vector<ExperimentInfo>& experiment_catalog();

// Runs the experiment (pure computation; no files touched). Throws
// ConfigError for an unknown experiment id or unusable config.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Writes trace.csv / trace-<slug>.csv, report.json and summary.txt under
// <out_dir>/<experiment>/. Returns the paths written.
std::vector<std::string> write_artifacts(const ExperimentResult& result,
                                         const ExperimentConfig& config);

// run + write; returns the process exit code (0 pass, 1 bound failure).
int run_and_write(const ExperimentConfig& config);

}  // namespace ballerg
