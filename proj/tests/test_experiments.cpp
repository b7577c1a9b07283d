#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ballerg/experiments.hpp"

using namespace ballerg;

namespace {
namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const BoundCheck& find_check(const ExperimentResult& res, const std::string& name) {
  for (const BoundCheck& c : res.checks)
    if (c.name == name) return c;
  FAIL("missing check: ", name);
  static BoundCheck dummy;
  return dummy;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("ballerg-test-" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_SUITE_BEGIN("experiments");

TEST_CASE("catalog lists the twelve experiments") {
  const auto& catalog = experiment_catalog();
  REQUIRE(catalog.size() == 12);
  const std::vector<std::string> ids = {
      "moebius-identities", "schwarz-sweep",       "orbit-affine-escape",
      "shift-separation",   "beethoven-l1",        "monomial-kill",
      "servicio-rate",      "janacek-rate",        "square-counterexample",
      "alpha-cesaro-limit", "conjugate-fixed-point", "hull-demo"};
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(catalog[i].id == ids[i]);
  CHECK_THROWS_AS(run_experiment(default_config("no-such-thing")), ConfigError);
}

TEST_CASE("moebius-identities passes at its stated tolerances") {
  const ExperimentResult res = run_experiment(default_config("moebius-identities"));
  CHECK(res.all_pass());
  CHECK(find_check(res, "alpha(0)=a").measured <= 1e-10);
  CHECK(find_check(res, "disc-identity").measured <= 1e-10);
  CHECK(find_check(res, "radius-bound").measured <= 1e-12);
}

TEST_CASE("schwarz-sweep covers the zoo") {
  const ExperimentResult res = run_experiment(default_config("schwarz-sweep"));
  CHECK(res.all_pass());
  CHECK(res.checks.size() >= 8);
  for (const BoundCheck& c : res.checks) CHECK(c.measured <= 1.0 + 1e-10);
}

TEST_CASE("orbit and shift experiments are exact") {
  const ExperimentResult escape = run_experiment(default_config("orbit-affine-escape"));
  CHECK(escape.all_pass());
  CHECK(find_check(escape, "norm(phi^n(0))=1-2^-n").measured == 0.0);

  const ExperimentResult sep = run_experiment(default_config("shift-separation"));
  CHECK(sep.all_pass());
  CHECK(find_check(sep, "sup-norm=1/2").measured == 0.5);
  CHECK(find_check(sep, "separation=1/2").measured == 0.5);
}

TEST_CASE("beethoven-l1 and monomial-kill") {
  const ExperimentResult b = run_experiment(default_config("beethoven-l1"));
  CHECK(b.all_pass());
  CHECK(find_check(b, "cesaro-l1-norm=1").measured == 0.0);

  const ExperimentResult k = run_experiment(default_config("monomial-kill"));
  CHECK(k.all_pass());
  CHECK(find_check(k, "applicable-cases").measured >= 30.0);
}

TEST_CASE("servicio-rate fits the diagonal contraction") {
  const ExperimentResult res = run_experiment(default_config("servicio-rate"));
  CHECK(res.all_pass());
  for (const double r : {0.3, 0.5, 0.8}) {
    std::ostringstream name;
    name << "rate-fit(r=" << r << ")";
    CHECK(find_check(res, name.str()).measured <= 0.02);
  }
  REQUIRE(res.traces.size() == 3);
  CHECK(res.traces[0].trace.values.size() == 40);
}

TEST_CASE("janacek-rate stays under the doubly exponential envelope") {
  const ExperimentResult res = run_experiment(default_config("janacek-rate"));
  CHECK(res.all_pass());
  CHECK(find_check(res, "fitted-rate").measured <= 0.55);
}

TEST_CASE("square-counterexample: closed form exact, 0.99 floor breaks at n = 18") {
  const ExperimentResult res = run_experiment(default_config("square-counterexample"));
  CHECK(find_check(res, "closed-form").pass);
  CHECK(find_check(res, "closed-form").measured <= 1e-12);
  CHECK(find_check(res, "verdict-persists").pass);

  // the pinned m-ladder tops out at 10^6, so the Cesaro distance drops below
  // 0.99 for n = 18..20 (to ~0.9555 at n = 20); the check reports that honestly
  const BoundCheck& floor = find_check(res, "distance>=0.99");
  CHECK_FALSE(floor.pass);
  CHECK(floor.measured >= 0.955);
  CHECK(floor.measured <= 0.956);
  CHECK_FALSE(res.all_pass());
}

TEST_CASE("alpha-cesaro-limit matches both closed-form conventions") {
  const ExperimentResult res = run_experiment(default_config("alpha-cesaro-limit"));
  CHECK(res.all_pass());
  CHECK(find_check(res, "C/n-envelope").measured <= 2.0);
  CHECK(find_check(res, "even-n-exact").measured <= 1e-12);
  CHECK(find_check(res, "even-odd-closed-forms").measured <= 1e-10);
  REQUIRE(res.traces.size() == 1);
  CHECK(res.traces[0].trace.values.size() == 200);
}

TEST_CASE("conjugate-fixed-point: powers converge, means only at C/n") {
  const ExperimentResult res = run_experiment(default_config("conjugate-fixed-point"));
  CHECK(find_check(res, "fixed-point=a").pass);
  CHECK(find_check(res, "power-distance<1e-6").pass);
  // the literal mean column decays like C/n and cannot reach 1e-6 by n = 100
  const BoundCheck& cesaro = find_check(res, "cesaro-distance<1e-6");
  CHECK_FALSE(cesaro.pass);
  CHECK(cesaro.measured >= 1e-5);
  CHECK(cesaro.measured <= 0.1);
}

TEST_CASE("hull-demo") {
  const ExperimentResult res = run_experiment(default_config("hull-demo"));
  CHECK(res.all_pass());
}

TEST_CASE("artifacts land on disk and trace.csv is byte-stable") {
  TempDir tmp;
  ExperimentConfig cfg = default_config("janacek-rate");
  cfg.out_dir = (tmp.path / "a").string();
  CHECK(run_and_write(cfg) == 0);

  const fs::path dir = tmp.path / "a" / "janacek-rate";
  CHECK(fs::exists(dir / "trace.csv"));
  CHECK(fs::exists(dir / "trace.json"));
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "summary.txt"));

  ExperimentConfig cfg2 = cfg;
  cfg2.out_dir = (tmp.path / "b").string();
  cfg2.threads = 4;
  CHECK(run_and_write(cfg2) == 0);
  CHECK(slurp(dir / "trace.csv") == slurp(tmp.path / "b" / "janacek-rate" / "trace.csv"));

  const std::string summary = slurp(dir / "summary.txt");
  CHECK(summary.find("ALL CHECKS PASSED") != std::string::npos);

  // failing experiments exit 1 and say so in the summary
  ExperimentConfig fail_cfg = default_config("square-counterexample");
  fail_cfg.out_dir = (tmp.path / "c").string();
  CHECK(run_and_write(fail_cfg) == 1);
  CHECK(slurp(tmp.path / "c" / "square-counterexample" / "summary.txt")
            .find("SOME CHECKS FAILED") != std::string::npos);
}

TEST_SUITE_END();
