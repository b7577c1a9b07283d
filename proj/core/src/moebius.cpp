#include "ballerg/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace ballerg {

Automorphism::Automorphism(Vector a) : a_(std::move(a)), v_(0.0) {
  if (!a_.space().is_hilbert())
    throw std::invalid_argument("Moebius automorphism requires an l2 ambient");
  const double na = norm(a_);
  if (!(na < 1.0)) throw std::invalid_argument("Moebius center must lie in the open ball");
  v_ = std::sqrt(1.0 - na * na);
}

Vector gamma(const Automorphism& p, const Vector& x) {
  const cdouble pairing = inner(x, p.center());
  Vector out = x * cdouble{p.v(), 0.0};
  out += p.center() * (pairing / cdouble{1.0 + p.v(), 0.0});
  return out;
}

Vector alpha(const Automorphism& p, const Vector& x) {
  const cdouble denom = cdouble{1.0, 0.0} - inner(x, p.center());
  if (std::abs(denom) < 1e-14)
    throw std::domain_error("alpha singularity: 1 - <x,a> vanishes");
  Vector num = p.center() - x;
  num *= cdouble{1.0, 0.0} / denom;
  return gamma(p, num);
}

double rho_bound(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("rho_bound requires 0 <= r < 1");
  return std::sqrt(1.0 - (1.0 - r) * (1.0 - r));
}

double disc_identity_residual(const Automorphism& p, const Vector& x) {
  const Vector y = alpha(p, x);
  const double ny = norm(y);
  const double na = norm(p.center());
  const double nx = norm(x);
  const double denom = std::norm(cdouble{1.0, 0.0} - inner(x, p.center()));
  const double lhs = 1.0 - ny * ny;
  const double rhs = (1.0 - na * na) * (1.0 - nx * nx) / denom;
  return std::abs(lhs - rhs);
}

}  // namespace ballerg
