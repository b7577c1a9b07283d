#pragma once

#include "ballerg/spaces.hpp"

// Automorphisms of the Hilbert ball. For a center a with ||a|| < 1 the
// linear map
//
//   gamma_a(x) = a <x,a> / (1 + v(a)) + v(a) x,   v(a) = sqrt(1 - ||a||^2)
//
// is non-expansive and fixes a, and
//
//   alpha_a(x) = gamma_a((a - x) / (1 - <x,a>))
//
// is an involutive automorphism of the open ball swapping 0 and a. These are
// the Hilbert-space analogue of the Moebius transforms of the disc; in one
// dimension alpha_a reduces to x -> (a - x)/(1 - x conj(a)).
//
// Automorphism families with the same swap-and-involute behavior exist on
// wider classes of spaces (C*-algebras and, more generally, JB*-triples);
// everything downstream only uses the three identities and the radius bound,
// but only the Hilbert-space formula is implemented here.
namespace ballerg {

class Automorphism {
 public:
  // Requires an l2 ambient and norm(a) < 1.
  explicit Automorphism(Vector a);

  const Vector& center() const { return a_; }
  // v(a) = sqrt(1 - ||a||^2), cached at construction.
  double v() const { return v_; }

 private:
  Vector a_;
  double v_;
};

// gamma_a(x); non-expansive: norm(result) <= norm(x).
Vector gamma(const Automorphism& p, const Vector& x);

// alpha_a(x); requires norm(x) < 1, maps into the open ball.
Vector alpha(const Automorphism& p, const Vector& x);

// sqrt(1 - (1 - r)^2): alpha_a maps rB into rho_bound(r)B whenever
// norm(a) <= r. Requires 0 <= r < 1.
double rho_bound(double r);

// |(1 - ||alpha_a(x)||^2) - (1 - ||a||^2)(1 - ||x||^2)/|1 - <x,a>|^2|.
// Stays below 1e-10 for norms up to 0.95.
double disc_identity_residual(const Automorphism& p, const Vector& x);

}  // namespace ballerg
