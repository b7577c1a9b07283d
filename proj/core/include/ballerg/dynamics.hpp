#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ballerg/defaults.hpp"
#include "ballerg/functions.hpp"
#include "ballerg/symbols.hpp"

// Composition-operator dynamics: powers C_phi^n f = f . phi^n and Cesaro
// means T_[n] = (1/n) sum_{k=0}^{n-1} C_phi^k, measured against candidate
// limit operators through sampled seminorms. Distances over a finite
// dictionary are lower bounds of true operator norms; reports label them
// "dictionary operator distance".
namespace ballerg {

enum class Mode { power, cesaro };

// f -> const f(a), i.e. evaluation at a.
struct EvalAtPoint {
  Vector a;
};
// f -> (f . alpha_a + f) / 2; l2 only.
struct HalfSumWithIdentity {
  Vector a;
};
using CustomLimit = std::function<cdouble(const PolyFn&, const Vector&)>;

class LimitCandidate {
 public:
  static LimitCandidate eval_at(Vector a);
  static LimitCandidate half_sum_with_identity(Vector a);
  static LimitCandidate custom(CustomLimit fn, std::string label = "custom");
  static LimitCandidate zero();  // custom limit that is identically 0

  // The candidate limit's value at f, sampled at x.
  cdouble value(const PolyFn& f, const Vector& x) const;
  const std::string& describe() const { return label_; }

 private:
  LimitCandidate(std::variant<EvalAtPoint, HalfSumWithIdentity, CustomLimit> v, std::string label)
      : v_(std::move(v)), label_(std::move(label)) {}
  std::variant<EvalAtPoint, HalfSumWithIdentity, CustomLimit> v_;
  std::string label_;
};

// Values of f . phi^n on the realized points; exact polynomial composition
// when the symbol is polynomial, pointwise orbits otherwise. Both routes
// agree within the oracle tolerance.
std::vector<cdouble> power_apply(const PolyFn& f, const Symbol& s, int n, const PointSet& pts,
                                 std::size_t dim_cap = defaults::kDimCap);
std::vector<cdouble> power_apply(const PolyFn& f, const Symbol& s, int n,
                                 const SeminormSpec& spec,
                                 std::size_t dim_cap = defaults::kDimCap);

// Pointwise average of power_apply over k = 0..n-1 (compensated summation).
std::vector<cdouble> cesaro_apply(const PolyFn& f, const Symbol& s, int n, const PointSet& pts,
                                  std::size_t dim_cap = defaults::kDimCap);
std::vector<cdouble> cesaro_apply(const PolyFn& f, const Symbol& s, int n,
                                  const SeminormSpec& spec,
                                  std::size_t dim_cap = defaults::kDimCap);

// max over dictionary entries of the sampled seminorm distance between the
// (power or Cesaro) image of f and limit(f). Requires a nonempty dictionary
// whose recorded sup-norm estimates are <= 1 + norm_tol.
double operator_distance(const Symbol& s, int n, Mode mode, const Dictionary& dict,
                         const SeminormSpec& spec, const LimitCandidate& limit,
                         double norm_tol = 1e-9, std::size_t dim_cap = defaults::kDimCap);

// (1/N) * l1-norm of sum_{j=0}^{N-1} B^j(e_N) for the backward shift B on
// l1; equals 1 exactly for every N.
double backward_shift_cesaro_l1_norm(int N);

struct TraceRow {
  int n;
  double dist_power;
  double dist_cesaro;
};

struct CesaroTrace {
  Symbol symbol;
  std::string f_label;
  SeminormSpec spec;
  std::string limit_label;
  std::vector<TraceRow> values;  // n strictly increasing from 1
};

// Incremental trace of both distance columns for n = 1..n_max. Per-point
// work may be chunked over threads; the max-merge keeps output bytes
// independent of the thread count.
CesaroTrace compute_cesaro_trace(const PolyFn& f, std::string f_label, const Symbol& s,
                                 const SeminormSpec& spec, const LimitCandidate& limit,
                                 int n_max, std::size_t dim_cap = defaults::kDimCap,
                                 unsigned threads = 1);

enum class TraceColumn { power, cesaro };

struct RateFit {
  double rate = 0.0;      // fitted geometric ratio e^slope
  double constant = 0.0;  // fitted prefactor
  double residual = 0.0;  // RMS residual in log space
  int n_min = 0;
  int n_max = 0;
  bool already_converged = false;  // every window distance below 1e-14
};

// Least-squares fit of log(dist) against n over the window [n_lo, n_hi];
// zero distances are skipped, at least 3 positive ones are required.
RateFit rate_fit(const CesaroTrace& trace, TraceColumn column, int n_lo, int n_hi);

enum class VerdictKind { converges, persists, inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::inconclusive;
  int window_first_n = 0;  // evidence window: last third of the trace
  int window_last_n = 0;
  double window_max = 0.0;
  double window_min = 0.0;
};

// Desk-scale evidence, not a proof: converges when the whole evidence window
// sits below tol, persists when it stays above the 10x-tol margin.
Verdict ergodicity_verdict(const CesaroTrace& trace, double tol = defaults::kVerdictTol);

std::string verdict_name(VerdictKind kind);

}  // namespace ballerg
