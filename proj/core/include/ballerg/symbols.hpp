#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ballerg/defaults.hpp"
#include "ballerg/spaces.hpp"

// Holomorphic self-maps of the unit ball: the closed zoo of symbols the
// composition operators are built from. Every variant is checked at
// construction to map the ball into itself; application, iteration,
// conjugation by a ball automorphism, Picard fixed points and orbit probes
// live here.
namespace ballerg {

class Symbol;

namespace sym {

// x -> (0, x1, x2, ...); isometric, grows the dimension by one.
struct ForwardShift {};
// x -> (x2, x3, ...).
struct BackwardShift {};
// x -> ((x1 + 1)/2, 0, 0, ...).
struct AffineHalf {};
// x -> (c*x1 + b, 0, ...); requires |c| + |b| <= 1 (and |b| < 1 when c = 0).
struct AffineContracted {
  double c;
  double b;
};
// x -> (x_n^2)_n.
struct CoordinateSquare {};
// x -> (x_n^m)_n, m >= 1.
struct CoordinatePower {
  int m;
};
// x -> (w_n x_n)_n with |w_n| <= 1. The last listed weight extends to all
// higher coordinates, so {r} is r*id in any dimension; append an explicit 0
// for a genuinely finite diagonal.
struct DiagonalLinear {
  std::vector<double> weights;
};
// x -> x0, norm(x0) < 1.
struct Constant {
  Vector x0;
};
// x -> alpha_a(x); l2 ambient only.
struct MoebiusAuto {
  Vector a;
};
// alpha_a . inner . alpha_a.
struct Conjugated {
  Vector a;
  std::shared_ptr<const Symbol> inner;
};
// Members applied left to right: Composite{f, g} is x -> g(f(x)).
struct Composite {
  std::vector<Symbol> parts;
};

using Variant = std::variant<ForwardShift, BackwardShift, AffineHalf, AffineContracted,
                             CoordinateSquare, CoordinatePower, DiagonalLinear, Constant,
                             MoebiusAuto, Conjugated, Composite>;

}  // namespace sym

class Symbol {
 public:
  // Validates the variant's ball-into-ball parameter constraints; throws
  // std::invalid_argument on violation.
  Symbol(sym::Variant v);  // NOLINT(google-explicit-constructor)

  const sym::Variant& variant() const { return v_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

 private:
  sym::Variant v_;
};

struct Orbit {
  Vector start;
  std::vector<Vector> points;  // phi^0 x, ..., phi^n x
  std::vector<double> norms;
};

struct StabilityReport {
  double sup_norm = 0.0;           // over all orbits and steps
  double min_separation = 0.0;     // min pairwise distance in the orbit union
  bool escape = false;             // some orbit has non-decreasing norms ending >= 1 - delta
  bool ball_stable_evidence = false;  // sup_norm <= 1 - delta
  double delta = defaults::kStabilityDelta;
  int n_max = 0;
  std::size_t seed_count = 0;
};

// True for every variant except MoebiusAuto and any Conjugated/Composite
// containing one.
bool is_polynomial(const Symbol& s);

// Image of x under the symbol; norm(result) < 1. ForwardShift errors once
// the dimension would exceed dim_cap.
Vector apply(const Symbol& s, const Vector& x, std::size_t dim_cap = defaults::kDimCap);

// Orbit of length n+1 by repeated application.
Orbit iterate(const Symbol& s, const Vector& x, int n,
              std::size_t dim_cap = defaults::kDimCap);

// alpha_a . s . alpha_a as a Symbol node.
Symbol conjugate(const Vector& a, const Symbol& s);

// Picard iteration x_{k+1} = s(x_k) from 0 until the step shrinks below tol;
// throws std::runtime_error("not contracting at this scale") when max_iter
// steps do not reach it. The result satisfies
// norm(apply(s, result) - result) <= 10 * tol whenever s maps the ball
// strictly inside itself.
Vector fixed_point(const Symbol& s, SpaceKind space, double tol = 1e-10, int max_iter = 1000,
                   std::size_t dim_cap = defaults::kDimCap);

// max over nonzero sample points of norm(s(x)) / norm(x). Requires
// s(0) = 0 to 1e-12 (throws std::invalid_argument "Schwarz hypothesis
// violated" otherwise); the result never exceeds 1 + 1e-10.
double schwarz_profile(const Symbol& s, const PointSet& samples,
                       std::size_t dim_cap = defaults::kDimCap);

// Finite-horizon orbit evidence for stability notions: sup of orbit norms,
// minimal pairwise separation of the orbit union (compactness-failure
// evidence when bounded below), and a monotone-escape flag. Evidence only;
// finite seeds and horizons cannot certify the universally quantified
// definitions.
StabilityReport stability_probe(const Symbol& s, const PointSet& seeds, int n_max,
                                double delta = defaults::kStabilityDelta,
                                std::size_t dim_cap = defaults::kDimCap);

}  // namespace ballerg
