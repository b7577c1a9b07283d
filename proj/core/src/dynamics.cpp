#include "ballerg/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ballerg/moebius.hpp"
#include "ballerg/parallel.hpp"

namespace ballerg {

namespace {

template <class T>
struct KahanSum {
  T sum{};
  T comp{};
  void add(T v) {
    const T y = v - comp;
    const T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

LimitCandidate LimitCandidate::eval_at(Vector a) {
  std::string label = "C_a";
  return LimitCandidate(EvalAtPoint{std::move(a)}, std::move(label));
}

LimitCandidate LimitCandidate::half_sum_with_identity(Vector a) {
  if (!a.space().is_hilbert())
    throw std::invalid_argument("half-sum limit requires an l2 ambient");
  return LimitCandidate(HalfSumWithIdentity{std::move(a)}, "(C_alpha_a + id)/2");
}

LimitCandidate LimitCandidate::custom(CustomLimit fn, std::string label) {
  if (!fn) throw std::invalid_argument("custom limit requires a function");
  return LimitCandidate(std::move(fn), std::move(label));
}

LimitCandidate LimitCandidate::zero() {
  return LimitCandidate(CustomLimit([](const PolyFn&, const Vector&) { return cdouble{0.0, 0.0}; }),
                        "0");
}

cdouble LimitCandidate::value(const PolyFn& f, const Vector& x) const {
  if (const auto* e = std::get_if<EvalAtPoint>(&v_)) return eval(f, e->a);
  if (const auto* h = std::get_if<HalfSumWithIdentity>(&v_)) {
    const Automorphism p(h->a);
    return 0.5 * (eval(f, alpha(p, x)) + eval(f, x));
  }
  return std::get<CustomLimit>(v_)(f, x);
}

std::vector<cdouble> power_apply(const PolyFn& f, const Symbol& s, int n, const PointSet& pts,
                                 std::size_t dim_cap) {
  if (n < 0) throw std::invalid_argument("power_apply requires n >= 0");
  std::vector<cdouble> out(pts.points.size());
  if (is_polynomial(s)) {
    PolyFn g = f;
    for (int k = 0; k < n; ++k) g = compose_exact(g, s);
    for (std::size_t j = 0; j < pts.points.size(); ++j) out[j] = eval(g, pts.points[j]);
  } else {
    for (std::size_t j = 0; j < pts.points.size(); ++j) {
      Vector cur = pts.points[j];
      for (int k = 0; k < n; ++k) cur = apply(s, cur, dim_cap);
      out[j] = eval(f, cur);
    }
  }
  return out;
}

std::vector<cdouble> power_apply(const PolyFn& f, const Symbol& s, int n,
                                 const SeminormSpec& spec, std::size_t dim_cap) {
  return power_apply(f, s, n, realize(spec), dim_cap);
}

std::vector<cdouble> cesaro_apply(const PolyFn& f, const Symbol& s, int n, const PointSet& pts,
                                  std::size_t dim_cap) {
  if (n < 1) throw std::invalid_argument("cesaro_apply requires n >= 1");
  std::vector<KahanSum<cdouble>> sums(pts.points.size());
  for (int k = 0; k < n; ++k) {
    const std::vector<cdouble> vals = power_apply(f, s, k, pts, dim_cap);
    for (std::size_t j = 0; j < vals.size(); ++j) sums[j].add(vals[j]);
  }
  std::vector<cdouble> out(pts.points.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = sums[j].sum / static_cast<double>(n);
  return out;
}

std::vector<cdouble> cesaro_apply(const PolyFn& f, const Symbol& s, int n,
                                  const SeminormSpec& spec, std::size_t dim_cap) {
  return cesaro_apply(f, s, n, realize(spec), dim_cap);
}

double operator_distance(const Symbol& s, int n, Mode mode, const Dictionary& dict,
                         const SeminormSpec& spec, const LimitCandidate& limit,
                         double norm_tol, std::size_t dim_cap) {
  if (dict.entries.empty()) throw std::invalid_argument("operator distance requires a dictionary");
  for (const auto& entry : dict.entries)
    if (entry.sup_norm > 1.0 + norm_tol)
      throw std::invalid_argument("dictionary entry is not sup-normalized: " + entry.label);
  const PointSet pts = realize(spec);
  double dist = 0.0;
  for (const auto& entry : dict.entries) {
    const std::vector<cdouble> vals = mode == Mode::power
                                          ? power_apply(entry.fn, s, n, pts, dim_cap)
                                          : cesaro_apply(entry.fn, s, n, pts, dim_cap);
    for (std::size_t j = 0; j < vals.size(); ++j)
      dist = std::max(dist, std::abs(vals[j] - limit.value(entry.fn, pts.points[j])));
  }
  return dist;
}

double backward_shift_cesaro_l1_norm(int N) {
  if (N < 1) throw std::invalid_argument("requires N >= 1");
  const Symbol shift{sym::BackwardShift{}};
  const SpaceKind l1 = SpaceKind::l1();
  // e_N scaled into the open ball; linearity makes the final ratio exact.
  Vector cur = Vector::unit(static_cast<std::size_t>(N) - 1, l1) * cdouble{0.5, 0.0};
  Vector acc = Vector::zero(static_cast<std::size_t>(N), l1);
  for (int j = 0; j < N; ++j) {
    acc += cur;
    cur = apply(shift, cur, static_cast<std::size_t>(N) + 1);
  }
  return norm(acc) / (0.5 * static_cast<double>(N));
}

CesaroTrace compute_cesaro_trace(const PolyFn& f, std::string f_label, const Symbol& s,
                                 const SeminormSpec& spec, const LimitCandidate& limit,
                                 int n_max, std::size_t dim_cap, unsigned threads) {
  if (n_max < 1) throw std::invalid_argument("trace requires n_max >= 1");
  const PointSet pts = realize(spec);
  const std::size_t m = pts.points.size();

  std::vector<cdouble> limit_vals(m);
  for (std::size_t j = 0; j < m; ++j) limit_vals[j] = limit.value(f, pts.points[j]);

  CesaroTrace trace{s, std::move(f_label), spec, limit.describe(), {}};
  trace.values.reserve(static_cast<std::size_t>(n_max));

  std::vector<KahanSum<cdouble>> sums(m);
  const bool poly = is_polynomial(s);

  if (poly) {
    PolyFn g = f;  // f . phi^(n-1) entering step n
    for (int n = 1; n <= n_max; ++n) {
      for (std::size_t j = 0; j < m; ++j) sums[j].add(eval(g, pts.points[j]));
      g = compose_exact(g, s);
      double dp = 0.0;
      double dc = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        dp = std::max(dp, std::abs(eval(g, pts.points[j]) - limit_vals[j]));
        dc = std::max(dc, std::abs(sums[j].sum / static_cast<double>(n) - limit_vals[j]));
      }
      trace.values.push_back({n, dp, dc});
    }
    return trace;
  }

  // Pointwise orbits, chunked over threads; each point's state is advanced
  // sequentially in n and merged by max, so bytes match for any thread count.
  std::vector<Vector> orbit(pts.points.begin(), pts.points.end());
  const unsigned n_chunks = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));
  std::vector<std::vector<TraceRow>> chunk_rows(n_chunks);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  {
    const std::size_t base = m / n_chunks;
    const std::size_t rem = m % n_chunks;
    std::size_t begin = 0;
    for (unsigned c = 0; c < n_chunks; ++c) {
      const std::size_t len = base + (c < rem ? 1 : 0);
      ranges.emplace_back(begin, begin + len);
      begin += len;
    }
  }
  detail::chunked_for(n_chunks, threads, [&](std::size_t c_begin, std::size_t c_end) {
    for (std::size_t c = c_begin; c < c_end; ++c) {
      auto [jb, je] = ranges[c];
      auto& rows = chunk_rows[c];
      rows.reserve(static_cast<std::size_t>(n_max));
      for (int n = 1; n <= n_max; ++n) {
        double dp = 0.0;
        double dc = 0.0;
        for (std::size_t j = jb; j < je; ++j) {
          sums[j].add(eval(f, orbit[j]));
          orbit[j] = apply(s, orbit[j], dim_cap);
          dp = std::max(dp, std::abs(eval(f, orbit[j]) - limit_vals[j]));
          dc = std::max(dc, std::abs(sums[j].sum / static_cast<double>(n) - limit_vals[j]));
        }
        rows.push_back({n, dp, dc});
      }
    }
  });
  for (int n = 1; n <= n_max; ++n) {
    double dp = 0.0;
    double dc = 0.0;
    for (unsigned c = 0; c < n_chunks; ++c) {
      if (chunk_rows[c].empty()) continue;
      dp = std::max(dp, chunk_rows[c][static_cast<std::size_t>(n) - 1].dist_power);
      dc = std::max(dc, chunk_rows[c][static_cast<std::size_t>(n) - 1].dist_cesaro);
    }
    trace.values.push_back({n, dp, dc});
  }
  return trace;
}

RateFit rate_fit(const CesaroTrace& trace, TraceColumn column, int n_lo, int n_hi) {
  std::vector<std::pair<double, double>> pts;  // (n, log dist)
  bool all_tiny = true;
  bool any_in_window = false;
  for (const TraceRow& row : trace.values) {
    if (row.n < n_lo || row.n > n_hi) continue;
    any_in_window = true;
    const double d = column == TraceColumn::power ? row.dist_power : row.dist_cesaro;
    if (d >= 1e-14) all_tiny = false;
    if (d > 0.0) pts.emplace_back(static_cast<double>(row.n), std::log(d));
  }
  if (!any_in_window) throw std::invalid_argument("rate fit window is empty");
  RateFit fit;
  fit.n_min = n_lo;
  fit.n_max = n_hi;
  if (all_tiny) {
    fit.already_converged = true;
    return fit;
  }
  if (pts.size() < 3)
    throw std::invalid_argument("rate fit requires at least 3 positive distances");

  double mean_n = 0.0;
  double mean_y = 0.0;
  for (const auto& [n, y] : pts) {
    mean_n += n;
    mean_y += y;
  }
  mean_n /= static_cast<double>(pts.size());
  mean_y /= static_cast<double>(pts.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [n, y] : pts) {
    sxx += (n - mean_n) * (n - mean_n);
    sxy += (n - mean_n) * (y - mean_y);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_n;
  fit.rate = std::exp(slope);
  fit.constant = std::exp(intercept);
  double ss = 0.0;
  for (const auto& [n, y] : pts) {
    const double r = y - (intercept + slope * n);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(pts.size()));
  return fit;
}

Verdict ergodicity_verdict(const CesaroTrace& trace, double tol) {
  if (trace.values.size() < 10)
    throw std::invalid_argument("verdict requires a trace with at least 10 entries");
  const std::size_t len = trace.values.size();
  const std::size_t first = len - (len + 2) / 3;  // last third, rounded up
  Verdict v;
  v.window_first_n = trace.values[first].n;
  v.window_last_n = trace.values.back().n;
  double mx = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  for (std::size_t i = first; i < len; ++i) {
    mx = std::max(mx, trace.values[i].dist_cesaro);
    mn = std::min(mn, trace.values[i].dist_cesaro);
  }
  v.window_max = mx;
  v.window_min = mn;
  if (mx < tol)
    v.kind = VerdictKind::converges;
  else if (mn >= 10.0 * tol)
    v.kind = VerdictKind::persists;
  else
    v.kind = VerdictKind::inconclusive;
  return v;
}

std::string verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::converges: return "converges";
    case VerdictKind::persists: return "persists";
    default: return "inconclusive";
  }
}

}  // namespace ballerg
