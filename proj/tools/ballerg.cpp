#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ballerg/experiments.hpp"

// Experiment runner: `ballerg list` prints the catalog, `ballerg run <id>`
// reproduces one result and writes trace.csv / report.json / summary.txt.
// Exit codes: 0 all bound checks pass, 1 a bound check failed, 2 bad config.

namespace {

int cmd_list() {
  for (const auto& info : ballerg::experiment_catalog())
    std::cout << info.id << "\n    " << info.checks_what << "\n";
  return 0;
}

int cmd_run(const std::string& id, const std::string& config_path, const std::string& out_dir,
            unsigned threads) {
  ballerg::ExperimentConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config: " << config_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = ballerg::config_from_json(buf.str());
    if (!id.empty() && cfg.experiment != id) {
      std::cerr << "error: config experiment \"" << cfg.experiment
                << "\" does not match requested \"" << id << "\"\n";
      return 2;
    }
  } else {
    cfg = ballerg::default_config(id);
  }
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (threads > 0) cfg.threads = threads;
  ballerg::apply_env_overrides(cfg);

  const int code = ballerg::run_and_write(cfg);
  std::cout << cfg.experiment << ": " << (code == 0 ? "all checks passed" : "CHECK FAILURES")
            << " (see " << cfg.out_dir << "/" << cfg.experiment << "/summary.txt)\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical experiments for composition-operator dynamics on the unit ball"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "print the experiment catalog");

  std::string id;
  std::string config_path;
  std::string out_dir;
  unsigned threads = 0;
  auto* run = app.add_subcommand("run", "run one experiment and write its artifacts");
  run->add_option("experiment", id, "experiment id (see `ballerg list`)");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--out", out_dir, "output directory (default: out)");
  run->add_option("--threads", threads, "worker threads for sampled traces");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list();
    if (id.empty() && config_path.empty()) {
      std::cerr << "error: run needs an experiment id or --config\n";
      return 2;
    }
    return cmd_run(id, config_path, out_dir, threads);
  } catch (const ballerg::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
