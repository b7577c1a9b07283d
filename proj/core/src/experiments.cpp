#include "ballerg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "ballerg/moebius.hpp"
#include "ballerg/rng.hpp"
#include "ballerg/serialize.hpp"
#include "serialize_detail.hpp"

namespace ballerg {

namespace {

namespace fs = std::filesystem;

BoundCheck check_le(std::string name, double measured, double bound, std::string detail = {}) {
  return {std::move(name), measured <= bound, measured, bound, std::move(detail)};
}

BoundCheck check_ge(std::string name, double measured, double bound, std::string detail = {}) {
  return {std::move(name), measured >= bound, measured, bound, std::move(detail)};
}

BoundCheck check_flag(std::string name, bool flag, std::string detail = {}) {
  return {std::move(name), flag, flag ? 1.0 : 0.0, 1.0, std::move(detail)};
}

Vector zero_l2(std::size_t dim) { return Vector::zero(dim, SpaceKind::l2()); }

// ---------------------------------------------------------------- moebius

ExperimentResult run_moebius_identities(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const std::vector<std::size_t> dims = {1, 2, 8, 32};
  const std::size_t pairs_per_dim = 2500;

  double worst_a0 = 0.0;       // alpha_a(0) = a
  double worst_aa = 0.0;       // alpha_a(a) = 0
  double worst_invol = 0.0;    // alpha_a(alpha_a(x)) = x
  double worst_residual = 0.0; // disc identity
  std::uint64_t idx = 0;
  for (const std::size_t d : dims) {
    for (std::size_t i = 0; i < pairs_per_dim; ++i, ++idx) {
      const Vector a = rng::ball_point(cfg.seed, 2 * idx, d, 0.9, SpaceKind::l2());
      const Vector x = rng::ball_point(cfg.seed, 2 * idx + 1, d, 0.9, SpaceKind::l2());
      const Automorphism p(a);
      worst_a0 = std::max(worst_a0, distance(alpha(p, zero_l2(d)), a));
      worst_aa = std::max(worst_aa, norm(alpha(p, a)));
      worst_invol = std::max(worst_invol, distance(alpha(p, alpha(p, x)), x));
      worst_residual = std::max(worst_residual, disc_identity_residual(p, x));
    }
  }
  res.checks.push_back(check_le("alpha(0)=a", worst_a0, 1e-10, "10^4 pairs, d in {1,2,8,32}"));
  res.checks.push_back(check_le("alpha(a)=0", worst_aa, 1e-10));
  res.checks.push_back(check_le("involution", worst_invol, 1e-10));
  res.checks.push_back(check_le("disc-identity", worst_residual, 1e-10));

  double worst_radius = -1.0;  // norm(alpha_a(x)) - rho_bound(r) over pairs in rB
  for (int ri = 1; ri <= 9; ++ri) {
    const double r = 0.1 * ri;
    const double rho = rho_bound(r);
    for (std::size_t i = 0; i < 1000; ++i, ++idx) {
      const Vector a = rng::ball_point(cfg.seed, 2 * idx, 4, r, SpaceKind::l2());
      const Vector x = rng::ball_point(cfg.seed, 2 * idx + 1, 4, r, SpaceKind::l2());
      worst_radius = std::max(worst_radius, norm(alpha(Automorphism(a), x)) - rho);
    }
  }
  res.checks.push_back(check_le("radius-bound", worst_radius, 1e-12,
                                "norm(alpha_a(x)) <= sqrt(1-(1-r)^2), r = 0.1..0.9"));
  res.notes.push_back("identity sweeps with seeded gaussian directions; norms <= 0.9");
  return res;
}

// ----------------------------------------------------------- schwarz sweep

std::vector<std::pair<std::string, Symbol>> fix0_zoo() {
  std::vector<std::pair<std::string, Symbol>> zoo;
  zoo.emplace_back("forward_shift", Symbol(sym::ForwardShift{}));
  zoo.emplace_back("backward_shift", Symbol(sym::BackwardShift{}));
  zoo.emplace_back("coordinate_square", Symbol(sym::CoordinateSquare{}));
  zoo.emplace_back("coordinate_cube", Symbol(sym::CoordinatePower{3}));
  zoo.emplace_back("diagonal(0.5)", Symbol(sym::DiagonalLinear{{0.5}}));
  zoo.emplace_back("diagonal(0.9,0.5,1)", Symbol(sym::DiagonalLinear{{0.9, 0.5, 1.0}}));
  zoo.emplace_back("moebius(0)", Symbol(sym::MoebiusAuto{zero_l2(4)}));
  zoo.emplace_back("square.then.shift",
                   Symbol(sym::Composite{{Symbol(sym::CoordinateSquare{}),
                                          Symbol(sym::ForwardShift{})}}));
  return zoo;
}

ExperimentResult run_schwarz_sweep(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  auto zoo = fix0_zoo();
  if (cfg.symbol.has_value()) zoo.emplace_back("config-symbol", *cfg.symbol);
  const std::vector<double> radii = {0.3, 0.6, 0.9};
  for (const auto& [label, s] : zoo) {
    double worst = 0.0;
    for (const double t : radii) {
      const SeminormSpec spec(SphereSample{t, cfg.count, cfg.seed, 16, SpaceKind::l2()});
      worst = std::max(worst, schwarz_profile(s, realize(spec), cfg.dim_cap));
    }
    res.checks.push_back(check_le("schwarz:" + label, worst, 1.0 + 1e-10,
                                  "max ratio over t in {0.3,0.6,0.9}"));
  }
  res.notes.push_back("profile = max norm(phi(x))/norm(x) over 2000-point sphere samples");
  return res;
}

// ------------------------------------------------------------ orbit escape

ExperimentResult run_orbit_affine_escape(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const Symbol affine{sym::AffineHalf{}};
  const Vector start = Vector::zero(1, SpaceKind::c0());
  const int n = std::min(cfg.n_max, 40);
  const Orbit orbit = iterate(affine, start, n, cfg.dim_cap);

  double worst = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double expected = 1.0 - std::ldexp(1.0, -k);
    worst = std::max(worst, std::abs(orbit.norms[static_cast<std::size_t>(k)] - expected));
  }
  BoundCheck exact{"norm(phi^n(0))=1-2^-n", worst == 0.0, worst, 0.0, "exact equality, n <= 40"};
  res.checks.push_back(exact);

  const auto probe = stability_probe(affine, PointSet::of({start}, "origin"), n, 1e-3,
                                     cfg.dim_cap);
  res.checks.push_back(check_flag("escape-flag", probe.escape,
                                  "monotone norms ending above 1 - 1e-3"));
  std::ostringstream os;
  os << "probe: sup_norm=" << probe.sup_norm << ", ball_stable_evidence="
     << (probe.ball_stable_evidence ? "yes" : "no");
  res.notes.push_back(os.str());
  return res;
}

// -------------------------------------------------------- shift separation

ExperimentResult run_shift_separation(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const Symbol shift{sym::ForwardShift{}};
  const Vector seed = Vector::unit(0, SpaceKind::c0()) * cdouble{0.5, 0.0};
  const int n = std::min(cfg.n_max, 100);
  const std::size_t cap = std::max<std::size_t>(cfg.dim_cap, static_cast<std::size_t>(n) + 2);
  const auto probe = stability_probe(shift, PointSet::of({seed}, "e1/2"), n, 1e-3, cap);

  BoundCheck sup{"sup-norm=1/2", probe.sup_norm == 0.5, probe.sup_norm, 0.5, "exact"};
  res.checks.push_back(sup);
  BoundCheck sep{"separation=1/2", probe.min_separation == 0.5, probe.min_separation, 0.5,
                 "pairwise sup-distance of the orbit union, exact"};
  res.checks.push_back(sep);
  res.checks.push_back(check_flag("ball-stable-evidence", probe.ball_stable_evidence,
                                  "sup norm stays at 1/2 < 1 - delta"));
  res.notes.push_back("orbit {F^n(e1/2)} = {e_(n+1)/2}: bounded away from the sphere but"
                      " uniformly separated (no compactness)");
  return res;
}

// ------------------------------------------------------------ beethoven l1

ExperimentResult run_beethoven_l1(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  std::vector<int> ns;
  for (int n = 1; n <= 100; ++n) ns.push_back(n);
  ns.push_back(1000);
  ns.push_back(10000);
  double worst = 0.0;
  for (const int n : ns)
    worst = std::max(worst, std::abs(backward_shift_cesaro_l1_norm(n) - 1.0));
  res.checks.push_back(check_le("cesaro-l1-norm=1", worst, 1e-12,
                                "(1/N)||sum B^j(e_N)||_1 for N in {1..100, 10^3, 10^4}"));
  res.notes.push_back("the Cesaro means of the backward shift keep operator norm 1 on l1:"
                      " no uniform convergence");
  return res;
}

// ------------------------------------------------------------ monomial kill

ExperimentResult run_monomial_kill(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const Symbol shift{sym::ForwardShift{}};
  std::mt19937_64 engine(rng::splitmix64(cfg.seed));
  std::uniform_int_distribution<std::size_t> pick_index(0, 9);  // 0-based, n_h <= 10
  std::uniform_int_distribution<std::uint64_t> pick_exp(1, 3);
  std::uniform_int_distribution<int> pick_extra(1, 3);

  int kill_failures = 0;
  int alive_failures = 0;
  int alive_applicable = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MultiIndex::Entry> entries;
    entries.emplace_back(pick_index(engine), pick_exp(engine));
    if (trial % 2 == 1) {  // spread support over several coordinates
      const int extra = pick_extra(engine);
      for (int e = 0; e < extra; ++e) entries.emplace_back(pick_index(engine), pick_exp(engine));
    }
    const MultiIndex alpha(std::move(entries));
    const std::size_t n_h = *alpha.max_support() + 1;  // 1-based max support index
    const std::size_t n_min = *alpha.min_support() + 1;

    PolyFn g = PolyFn::monomial(alpha);
    bool alive_before = true;
    for (std::size_t n = 1; n <= n_h + 2; ++n) {
      g = compose_exact(g, shift);
      if (n == n_h - 1) alive_before = !g.is_zero();
      if (n >= n_h && !g.is_zero()) ++kill_failures;
    }
    if (n_min == n_h && n_h >= 1) {
      ++alive_applicable;
      if (n_h > 1 && !alive_before) ++alive_failures;
    }
  }
  res.checks.push_back(check_le("killed-at-n_h", static_cast<double>(kill_failures), 0.0,
                                "C_F^n(x^alpha) = 0 for n >= n_h, 100 random multi-indices"));
  res.checks.push_back(check_le("alive-at-n_h-1", static_cast<double>(alive_failures), 0.0,
                                "nonzero at n_h - 1 when min support = n_h (" +
                                    std::to_string(alive_applicable) + " applicable)"));
  res.checks.push_back(check_ge("applicable-cases", static_cast<double>(alive_applicable), 1.0));
  return res;
}

// ------------------------------------------------------------ servicio rate

CesaroTrace dictionary_trace(const Symbol& s, const Dictionary& dict, const SeminormSpec& spec,
                             const LimitCandidate& limit, int n_max, std::size_t dim_cap,
                             unsigned threads, std::string f_label) {
  for (const auto& entry : dict.entries)
    if (entry.sup_norm > 1.0 + 1e-9)
      throw std::invalid_argument("dictionary entry is not sup-normalized: " + entry.label);
  CesaroTrace combined{s, std::move(f_label), spec, limit.describe(), {}};
  bool first = true;
  for (const auto& entry : dict.entries) {
    const CesaroTrace one =
        compute_cesaro_trace(entry.fn, entry.label, s, spec, limit, n_max, dim_cap, threads);
    if (first) {
      combined.values = one.values;
      first = false;
    } else {
      for (std::size_t i = 0; i < combined.values.size(); ++i) {
        combined.values[i].dist_power =
            std::max(combined.values[i].dist_power, one.values[i].dist_power);
        combined.values[i].dist_cesaro =
            std::max(combined.values[i].dist_cesaro, one.values[i].dist_cesaro);
      }
    }
  }
  return combined;
}

Dictionary load_or_default_dictionary(const ExperimentConfig& cfg, std::size_t dim,
                                      unsigned max_degree, SpaceKind space) {
  if (cfg.dictionary_path.empty()) return monomial_dictionary(dim, max_degree, space);
  std::ifstream in(cfg.dictionary_path);
  if (!in) throw ConfigError("cannot open dictionary file: " + cfg.dictionary_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return dictionary_from_json(buf.str());
}

ExperimentResult run_servicio_rate(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const SpaceKind space = SpaceKind::c0();
  const std::size_t dim = 8;
  const Dictionary dict = load_or_default_dictionary(cfg, dim, 2, space);
  const LimitCandidate c0_limit = LimitCandidate::eval_at(Vector::zero(dim, space));
  const int n_max = std::min(cfg.n_max, 40);

  const std::vector<double> rates = {0.3, 0.5, 0.8};
  for (const double r : rates) {
    const Symbol s{sym::DiagonalLinear{{r}}};
    const SeminormSpec spec(SphereSample{cfg.t, cfg.count, cfg.seed, dim, space});
    CesaroTrace trace = dictionary_trace(s, dict, spec, c0_limit, n_max, cfg.dim_cap,
                                         cfg.threads, "sup-normalized monomials deg<=2");
    double worst_ratio = 0.0;
    for (const TraceRow& row : trace.values)
      worst_ratio = std::max(worst_ratio, row.dist_power / (2.0 * std::pow(r, row.n)));
    std::ostringstream bound_name;
    bound_name << "2r^n-bound(r=" << r << ")";
    res.checks.push_back(check_le(bound_name.str(), worst_ratio, 1.0,
                                  "max_n dist(n) / (2 r^n), dictionary operator distance"));

    const RateFit fit = rate_fit(trace, TraceColumn::power, 1, n_max);
    std::ostringstream fit_name;
    fit_name << "rate-fit(r=" << r << ")";
    res.checks.push_back(check_le(fit_name.str(), std::abs(fit.rate - r), 0.02,
                                  "fitted geometric rate vs r"));

    std::ostringstream slug;
    slug << "r" << std::lround(r * 10);
    res.traces.push_back({slug.str(), std::move(trace)});
  }
  res.notes.push_back("dictionary operator distances are lower bounds of the true operator"
                      " norm distance; the 2r^n bound holds per function");
  return res;
}

// ------------------------------------------------------------- janacek rate

ExperimentResult run_janacek_rate(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const SpaceKind space = SpaceKind::l2();
  const std::size_t dim = 8;
  const double t = cfg.t;
  const Symbol square{sym::CoordinateSquare{}};
  const SeminormSpec spec(SphereSample{t, cfg.count, cfg.seed, dim, space});
  const PointSet pts = realize(spec);

  // Orbit-norm bound norm(phi^n(x)) <= (rho/t)^n norm(x) with rho = t^2.
  double worst_orbit_ratio = 0.0;
  for (const Vector& x : pts.points) {
    Vector cur = x;
    for (int n = 1; n <= 10; ++n) {
      cur = apply(square, cur, cfg.dim_cap);
      worst_orbit_ratio = std::max(worst_orbit_ratio,
                                   norm(cur) / (std::pow(t, n) * norm(x)));
    }
  }
  res.checks.push_back(check_le("orbit-bound", worst_orbit_ratio, 1.0 + 1e-12,
                                "norm(phi^n x) / ((rho/t)^n norm(x)), rho = t^2"));

  CesaroTrace trace = compute_cesaro_trace(
      PolyFn::coordinate(0), "x0", square, spec,
      LimitCandidate::eval_at(Vector::zero(dim, space)), std::min(cfg.n_max, 40), cfg.dim_cap,
      cfg.threads);

  double worst_fn_ratio = 0.0;  // dist(n) <= 2 ||f||_tB (rho/t)^(n-1), ||x0||_tB = t
  for (const TraceRow& row : trace.values)
    worst_fn_ratio = std::max(worst_fn_ratio,
                              row.dist_power / (2.0 * t * std::pow(t, row.n - 1)));
  res.checks.push_back(check_le("2norm-rate-bound", worst_fn_ratio, 1.0,
                                "dist_power(n) / (2 ||f|| (rho/t)^(n-1))"));

  const RateFit fit = rate_fit(trace, TraceColumn::power, 1, trace.values.back().n);
  res.checks.push_back(check_le("fitted-rate", fit.already_converged ? 0.0 : fit.rate, 0.55,
                                "power-mode geometric rate at the sample radius t"));
  res.traces.push_back({"square", std::move(trace)});
  res.notes.push_back("coordinate squaring contracts doubly exponentially on tB; the fitted"
                      " geometric rate is far below rho/t");
  return res;
}

// ----------------------------------------------------- square counterexample

ExperimentResult run_square_counterexample(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const SpaceKind space = SpaceKind::l2();
  std::vector<Vector> pts;
  std::vector<double> ms;
  for (int e = 1; e <= 6; ++e) {
    const double m = std::pow(10.0, e);
    ms.push_back(m);
    pts.push_back(Vector::unit(0, space) * cdouble{1.0 - 1.0 / m, 0.0});
  }
  const SeminormSpec spec{ExplicitPoints{PointSet::of(pts, "z_m = (1-1/m)e1")}};
  const Symbol square{sym::CoordinateSquare{}};
  const PolyFn f = PolyFn::coordinate(0);
  const LimitCandidate limit = LimitCandidate::eval_at(Vector::zero(1, space));
  const int n_max = std::max(cfg.n_max, 20);

  CesaroTrace trace =
      compute_cesaro_trace(f, "x0", square, spec, limit, n_max, cfg.dim_cap, cfg.threads);

  // Per-point Cesaro values against the independent closed form
  // (1/n) sum_k (1-1/m)^(2^k).
  double worst_closed_form = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const std::vector<cdouble> vals = cesaro_apply(f, square, n, realize(spec), cfg.dim_cap);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      double oracle = 0.0;
      for (int k = 0; k < n; ++k)
        oracle += std::pow(1.0 - 1.0 / ms[j], std::ldexp(1.0, k));
      oracle /= n;
      worst_closed_form = std::max(worst_closed_form, std::abs(vals[j] - oracle));
    }
  }
  res.checks.push_back(check_le("closed-form", worst_closed_form, 1e-12,
                                "cesaro values vs (1/n) sum (1-1/m)^(2^k)"));

  double min_dist = 1.0;
  for (const TraceRow& row : trace.values)
    if (row.n <= 20) min_dist = std::min(min_dist, row.dist_cesaro);
  res.checks.push_back(check_ge("distance>=0.99", min_dist, 0.99,
                                "min over n <= 20 of the Cesaro distance to C_0; needs ladder"
                                " points with m above 10^6 to stay above 0.99 through n = 20"));

  const Verdict verdict = ergodicity_verdict(trace, cfg.tol);
  res.checks.push_back(check_flag("verdict-persists", verdict.kind == VerdictKind::persists,
                                  "window [" + std::to_string(verdict.window_first_n) + "," +
                                      std::to_string(verdict.window_last_n) + "] min=" +
                                      detail::format_double(verdict.window_min)));
  res.traces.push_back({"square-cex", std::move(trace)});
  res.notes.push_back("the supremum over all m equals 1 for every n; the finite m-ladder"
                      " approximates it from below and decays once 2^n ~ m");
  return res;
}

// ------------------------------------------------------- alpha cesaro limit

ExperimentResult run_alpha_cesaro_limit(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const SpaceKind space = SpaceKind::l2();
  const std::size_t dim = 8;
  const Vector a = rng::ball_point(cfg.seed, 7001, dim, 0.8, space);
  const Symbol moebius{sym::MoebiusAuto{a}};
  const PolyFn f = PolyFn::coordinate(0);
  const SeminormSpec spec(SphereSample{cfg.t, cfg.count, cfg.seed, dim, space});
  const int n_max = std::max(cfg.n_max, 200);

  CesaroTrace trace = compute_cesaro_trace(f, "x0", moebius, spec,
                                           LimitCandidate::half_sum_with_identity(a), n_max,
                                           cfg.dim_cap, cfg.threads);

  double fitted_c = 0.0;
  for (const TraceRow& row : trace.values)
    fitted_c = std::max(fitted_c, row.n * row.dist_cesaro);
  res.checks.push_back(check_le("C/n-envelope", fitted_c, 2.0,
                                "fitted C = max_n n * dist_cesaro(n), n <= " +
                                    std::to_string(n_max)));

  double worst_even = 0.0;
  for (const TraceRow& row : trace.values)
    if (row.n % 2 == 0) worst_even = std::max(worst_even, row.dist_cesaro);
  res.checks.push_back(check_le("even-n-exact", worst_even, 1e-12,
                                "T_[2k] equals (C_alpha + id)/2 exactly"));

  // Closed forms in the inclusive-sum convention: means (1/n) sum_{j=0}^{n}
  // C^j f compared to (k/(2k-1))(C_alpha + id) f at n = 2k-1 and to
  // ((C_alpha + id)/2 + id/(2k)) f at n = 2k.
  const PointSet pts = realize(spec);
  const Automorphism p(a);
  double worst_display = 0.0;
  for (const Vector& x : pts.points) {
    const cdouble v_id = eval(f, x);
    const cdouble v_alpha = eval(f, alpha(p, x));
    Vector cur = x;
    cdouble sum = v_id;  // j = 0 term
    for (int j = 1; j <= n_max; ++j) {
      cur = apply(moebius, cur, cfg.dim_cap);
      sum += eval(f, cur);
      const int n = j;  // inclusive sum has n + 1 terms
      if (n % 2 == 0) {
        const int k = n / 2;
        const cdouble closed = 0.5 * (v_alpha + v_id) + v_id / static_cast<double>(2 * k);
        worst_display = std::max(worst_display, std::abs(sum / static_cast<double>(n) - closed));
      } else {
        const int k = (n + 1) / 2;
        const cdouble closed =
            (static_cast<double>(k) / static_cast<double>(2 * k - 1)) * (v_alpha + v_id);
        worst_display = std::max(worst_display, std::abs(sum / static_cast<double>(n) - closed));
      }
    }
  }
  res.checks.push_back(check_le("even-odd-closed-forms", worst_display, 1e-10,
                                "inclusive-sum means vs their closed forms"));
  res.traces.push_back({"alpha", std::move(trace)});
  res.notes.push_back("alpha_a is an involution: the Cesaro means alternate around"
                      " (C_alpha + id)/2 and converge at rate 1/n");
  return res;
}

// --------------------------------------------------- conjugate fixed point

ExperimentResult run_conjugate_fixed_point(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const SpaceKind space = SpaceKind::l2();
  const std::size_t dim = 8;
  const Vector a = rng::ball_point(cfg.seed, 9001, dim, 0.8, space);
  const Symbol contraction = cfg.symbol.value_or(Symbol(sym::DiagonalLinear{{0.5}}));
  const Symbol conjugated = conjugate(a, contraction);

  const Vector fp = fixed_point(conjugated, space, 1e-10, 500, cfg.dim_cap);
  res.checks.push_back(check_le("fixed-point=a", distance(fp, a), 1e-8,
                                "Picard iteration from 0 on alpha_a . phi . alpha_a"));

  const int n_max = std::max(cfg.n_max, 100);
  const SeminormSpec spec(SphereSample{cfg.t, cfg.count, cfg.seed, dim, space});
  CesaroTrace trace =
      compute_cesaro_trace(PolyFn::coordinate(0), "x0", conjugated, spec,
                           LimitCandidate::eval_at(a), n_max, cfg.dim_cap, cfg.threads);

  double power_at_100 = 1.0;
  double cesaro_at_100 = 1.0;
  for (const TraceRow& row : trace.values)
    if (row.n == std::min(n_max, 100)) {
      power_at_100 = row.dist_power;
      cesaro_at_100 = row.dist_cesaro;
    }
  res.checks.push_back(check_le("power-distance<1e-6", power_at_100, 1e-6,
                                "C_(psi^n) -> C_a: power distance at n = 100"));
  res.checks.push_back(check_le("cesaro-distance<1e-6", cesaro_at_100, 1e-6,
                                "Cesaro distance at n = 100; converges like C/n, so this"
                                " tolerance is only reachable by the power column"));

  double fitted_c = 0.0;
  for (const TraceRow& row : trace.values)
    fitted_c = std::max(fitted_c, row.n * row.dist_cesaro);
  res.notes.push_back("cesaro column decays like C/n with C <= " +
                      detail::format_double(fitted_c));
  res.traces.push_back({"conjugated", std::move(trace)});
  return res;
}

// -------------------------------------------------------------- hull demo

ExperimentResult run_hull_demo(const ExperimentConfig& cfg) {
  ExperimentResult res{cfg.experiment, {}, {}, {}};
  const SpaceKind space = SpaceKind::l2();
  const PointSet A = PointSet::of({Vector::from_reals({0.5}, space)}, "A = {0.5}");
  const Dictionary dict = Dictionary::of({{"x0", PolyFn::coordinate(0), 1.0}});

  res.checks.push_back(check_flag(
      "member:x-in-A", hull_membership(Vector::from_reals({0.5}, space), A, dict)));
  res.checks.push_back(check_flag(
      "member:0.4", hull_membership(Vector::from_reals({0.4}, space), A, dict)));
  res.checks.push_back(check_flag(
      "non-member:0.6", !hull_membership(Vector::from_reals({0.6}, space), A, dict)));

  // Enlarging the dictionary can only remove hull members.
  const Dictionary bigger = Dictionary::of(
      {{"x0", PolyFn::coordinate(0), 1.0},
       {"x0^2", PolyFn::monomial(MultiIndex::single(0, 2)), 1.0}});
  int violations = 0;
  for (int i = -9; i <= 9; ++i) {
    const Vector x = Vector::from_reals({0.1 * i}, space);
    if (hull_membership(x, A, bigger) && !hull_membership(x, A, dict)) ++violations;
  }
  res.checks.push_back(check_le("hull-monotonicity", static_cast<double>(violations), 0.0,
                                "dictionary growth shrinks the hull"));

  const std::size_t dim = 2;
  const PointSet A2 = PointSet::of({rng::sphere_point(cfg.seed, 0, dim, 0.4, space),
                                    rng::sphere_point(cfg.seed, 1, dim, 0.4, space),
                                    rng::sphere_point(cfg.seed, 2, dim, 0.4, space)},
                                   "three points at norm 0.4");
  const Dictionary dict2 = monomial_dictionary(dim, 2, space);
  int members = 0;
  for (std::uint64_t i = 0; i < 200; ++i)
    if (hull_membership(rng::ball_point(cfg.seed, 100 + i, dim, 0.9, space), A2, dict2))
      ++members;
  res.notes.push_back("2-d demo: " + std::to_string(members) +
                      "/200 sampled points fall in the dictionary hull of " + A2.label);
  res.checks.push_back(check_flag("set-points-are-members",
                                  hull_membership(A2.points[0], A2, dict2) &&
                                      hull_membership(A2.points[1], A2, dict2) &&
                                      hull_membership(A2.points[2], A2, dict2)));
  return res;
}

using Runner = std::function<ExperimentResult(const ExperimentConfig&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"moebius-identities", run_moebius_identities},
      {"schwarz-sweep", run_schwarz_sweep},
      {"orbit-affine-escape", run_orbit_affine_escape},
      {"shift-separation", run_shift_separation},
      {"beethoven-l1", run_beethoven_l1},
      {"monomial-kill", run_monomial_kill},
      {"servicio-rate", run_servicio_rate},
      {"janacek-rate", run_janacek_rate},
      {"square-counterexample", run_square_counterexample},
      {"alpha-cesaro-limit", run_alpha_cesaro_limit},
      {"conjugate-fixed-point", run_conjugate_fixed_point},
      {"hull-demo", run_hull_demo},
  };
  return table;
}

}  // namespace

bool ExperimentResult::all_pass() const {
  for (const BoundCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<ExperimentInfo>& experiment_catalog() {
  static const std::vector<ExperimentInfo> catalog = {
      {"moebius-identities",
       "alpha_a(0)=a, alpha_a(a)=0, involution, disc identity, and the"
       " sqrt(1-(1-r)^2) radius bound"},
      {"schwarz-sweep", "norm(phi(x)) <= norm(x) for every zoo symbol fixing 0"},
      {"orbit-affine-escape",
       "norm(phi^n(0)) = 1 - 2^-n exactly for the affine half map; orbit escapes to the sphere"},
      {"shift-separation",
       "forward-shift orbit of e1/2: sup norm 1/2, pairwise separation 1/2 (not compact)"},
      {"beethoven-l1", "(1/N)||sum_j B^j(e_N)||_1 = 1 for all N: C_B not uniformly mean ergodic"},
      {"monomial-kill", "C_F^n(x^alpha) = 0 exactly once n reaches the support index"},
      {"servicio-rate", "||C_phi^n - C_0|| <= 2 r^n for diagonal contractions, fitted rate = r"},
      {"janacek-rate", "(rho/t)^n decay for coordinate squaring on tB"},
      {"square-counterexample",
       "Cesaro distance of C_P to C_0 sticks near 1 on z_m = (1-1/m)e1: not mean ergodic"},
      {"alpha-cesaro-limit",
       "Cesaro means of C_alpha_a converge to (C_alpha_a + id)/2 at rate 1/n"},
      {"conjugate-fixed-point",
       "alpha_a-conjugated contraction: fixed point at a, C_(psi^n) -> C_a"},
      {"hull-demo", "finite-dictionary holomorphic hull membership"},
  };
  return catalog;
}

ExperimentConfig default_config(const std::string& experiment_id) {
  ExperimentConfig cfg;
  cfg.experiment = experiment_id;
  if (experiment_id == "alpha-cesaro-limit") cfg.n_max = 200;
  if (experiment_id == "conjugate-fixed-point") cfg.n_max = 100;
  if (experiment_id == "square-counterexample") cfg.n_max = 20;
  if (experiment_id == "shift-separation") cfg.n_max = 100;
  return cfg;
}

ExperimentConfig config_from_json(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("experiment"))
    throw ConfigError("config must be an object with an \"experiment\" key");

  ExperimentConfig cfg = default_config(j.at("experiment").get<std::string>());
  SpaceKind symbol_space = SpaceKind::l2();
  if (j.contains("space")) symbol_space = detail::parse_space(j.at("space"));

  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") {
        continue;
      } else if (key == "space") {
        continue;
      } else if (key == "symbol") {
        cfg.symbol = detail::parse_symbol(value, symbol_space);
      } else if (key == "dim_cap") {
        cfg.dim_cap = value.get<std::size_t>();
      } else if (key == "spec") {
        if (value.contains("t")) cfg.t = value.at("t").get<double>();
        if (value.contains("count")) cfg.count = value.at("count").get<std::size_t>();
        if (value.contains("seed")) cfg.seed = value.at("seed").get<std::uint64_t>();
      } else if (key == "dictionary") {
        cfg.dictionary_path = value.get<std::string>();
      } else if (key == "n_max") {
        cfg.n_max = value.get<int>();
      } else if (key == "tol") {
        cfg.tol = value.get<double>();
      } else if (key == "out") {
        cfg.out_dir = value.get<std::string>();
      } else if (key == "threads") {
        cfg.threads = value.get<unsigned>();
      } else {
        throw ConfigError("unknown config key: " + key);
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  if (cfg.n_max < 1) throw ConfigError("n_max must be >= 1");
  if (!(cfg.t > 0.0 && cfg.t < 1.0)) throw ConfigError("spec radius t must satisfy 0 < t < 1");
  if (cfg.count < 1) throw ConfigError("spec count must be >= 1");
  return cfg;
}

void apply_env_overrides(ExperimentConfig& config) {
  if (const char* env = std::getenv("BALLERG_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("BALLERG_SEED must be an unsigned integer");
    }
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto it = runners().find(config.experiment);
  if (it == runners().end()) throw ConfigError("unknown experiment: " + config.experiment);
  ExperimentResult result = it->second(config);
  if (config.symbol.has_value() && config.experiment != "schwarz-sweep" &&
      config.experiment != "conjugate-fixed-point")
    result.notes.push_back("config symbol ignored: this experiment pins its subject map");
  return result;
}

std::vector<std::string> write_artifacts(const ExperimentResult& result,
                                         const ExperimentConfig& config) {
  const fs::path dir = fs::path(config.out_dir) / result.id;
  fs::create_directories(dir);
  std::vector<std::string> written;

  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    const auto& [slug, trace] = result.traces[i];
    const fs::path csv = dir / (i == 0 ? std::string("trace.csv") : "trace-" + slug + ".csv");
    std::ofstream(csv, std::ios::binary) << trace_to_csv(trace);
    written.push_back(csv.string());
    const fs::path tj = dir / (i == 0 ? std::string("trace.json") : "trace-" + slug + ".json");
    std::ofstream(tj, std::ios::binary) << trace_to_json(trace, config.seed);
    written.push_back(tj.string());
  }
  if (result.traces.empty()) {
    const fs::path csv = dir / "trace.csv";
    std::ofstream(csv, std::ios::binary) << "n,dist_power,dist_cesaro\n";
    written.push_back(csv.string());
  }

  detail::json checks = detail::json::array();
  for (const BoundCheck& c : result.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"measured", c.measured},
                      {"bound", c.bound},
                      {"detail", c.detail}});
  detail::json report = {{"experiment", result.id},
                         {"all_pass", result.all_pass()},
                         {"checks", checks},
                         {"notes", result.notes},
                         {"config",
                          {{"seed", config.seed},
                           {"t", config.t},
                           {"count", config.count},
                           {"n_max", config.n_max},
                           {"dim_cap", config.dim_cap},
                           {"tol", config.tol},
                           {"threads", config.threads}}}};
  const fs::path rj = dir / "report.json";
  std::ofstream(rj, std::ios::binary) << report.dump(2) << "\n";
  written.push_back(rj.string());

  std::ostringstream summary;
  summary << "experiment: " << result.id << "\n";
  for (const BoundCheck& c : result.checks)
    summary << (c.pass ? "PASS" : "FAIL") << "  " << c.name
            << "  measured=" << detail::format_double(c.measured)
            << "  bound=" << detail::format_double(c.bound)
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  for (const std::string& note : result.notes) summary << "note: " << note << "\n";
  summary << (result.all_pass() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
  const fs::path st = dir / "summary.txt";
  std::ofstream(st, std::ios::binary) << summary.str();
  written.push_back(st.string());
  return written;
}

int run_and_write(const ExperimentConfig& config) {
  const ExperimentResult result = run_experiment(config);
  write_artifacts(result, config);
  return result.all_pass() ? 0 : 1;
}

}  // namespace ballerg
