#include "ballerg/symbols.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ballerg/moebius.hpp"

namespace ballerg {

namespace {

double weight_at(const sym::DiagonalLinear& d, std::size_t i) {
  return d.weights[std::min(i, d.weights.size() - 1)];
}

void validate(const sym::Variant& v) {
  if (const auto* ac = std::get_if<sym::AffineContracted>(&v)) {
    if (std::abs(ac->c) + std::abs(ac->b) > 1.0)
      throw std::invalid_argument("affine map requires |c| + |b| <= 1");
    if (ac->c == 0.0 && std::abs(ac->b) >= 1.0)
      throw std::invalid_argument("constant affine map requires |b| < 1");
  } else if (const auto* cp = std::get_if<sym::CoordinatePower>(&v)) {
    if (cp->m < 1) throw std::invalid_argument("coordinate power requires m >= 1");
  } else if (const auto* dl = std::get_if<sym::DiagonalLinear>(&v)) {
    if (dl->weights.empty()) throw std::invalid_argument("diagonal map requires weights");
    for (double w : dl->weights)
      if (std::abs(w) > 1.0) throw std::invalid_argument("diagonal weights must satisfy |w| <= 1");
  } else if (const auto* c = std::get_if<sym::Constant>(&v)) {
    if (!(norm(c->x0) < 1.0)) throw std::invalid_argument("constant value must lie in the open ball");
  } else if (const auto* m = std::get_if<sym::MoebiusAuto>(&v)) {
    if (!m->a.space().is_hilbert())
      throw std::invalid_argument("Moebius symbol requires an l2 ambient");
    if (!(norm(m->a) < 1.0)) throw std::invalid_argument("Moebius center must lie in the open ball");
  } else if (const auto* cj = std::get_if<sym::Conjugated>(&v)) {
    if (!cj->inner) throw std::invalid_argument("conjugated symbol requires an inner symbol");
    if (!cj->a.space().is_hilbert())
      throw std::invalid_argument("conjugation requires an l2 ambient");
    if (!(norm(cj->a) < 1.0))
      throw std::invalid_argument("conjugation center must lie in the open ball");
  } else if (const auto* co = std::get_if<sym::Composite>(&v)) {
    if (co->parts.empty()) throw std::invalid_argument("composite requires at least one part");
  }
}

cdouble ipow_naive(cdouble z, int m) {
  cdouble r{1.0, 0.0};
  for (int i = 0; i < m; ++i) r *= z;
  return r;
}

struct ApplyVisitor {
  const Vector& x;
  std::size_t dim_cap;

  Vector operator()(const sym::ForwardShift&) const {
    if (x.dim() + 1 > dim_cap) throw std::length_error("forward shift exceeds dimension cap");
    std::vector<cdouble> c;
    c.reserve(x.dim() + 1);
    c.emplace_back(0.0, 0.0);
    c.insert(c.end(), x.coords().begin(), x.coords().end());
    return Vector(std::move(c), x.space());
  }
  Vector operator()(const sym::BackwardShift&) const {
    if (x.dim() == 1) return Vector::zero(1, x.space());
    return Vector(std::vector<cdouble>(x.coords().begin() + 1, x.coords().end()), x.space());
  }
  Vector operator()(const sym::AffineHalf&) const {
    return Vector({(x.coord(0) + 1.0) / 2.0}, x.space());
  }
  Vector operator()(const sym::AffineContracted& a) const {
    return Vector({a.c * x.coord(0) + a.b}, x.space());
  }
  Vector operator()(const sym::CoordinateSquare&) const {
    std::vector<cdouble> c(x.coords());
    for (auto& z : c) z *= z;
    return Vector(std::move(c), x.space());
  }
  Vector operator()(const sym::CoordinatePower& p) const {
    std::vector<cdouble> c(x.coords());
    for (auto& z : c) z = ipow_naive(z, p.m);
    return Vector(std::move(c), x.space());
  }
  Vector operator()(const sym::DiagonalLinear& d) const {
    std::vector<cdouble> c(x.coords());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= weight_at(d, i);
    return Vector(std::move(c), x.space());
  }
  Vector operator()(const sym::Constant& c) const { return c.x0; }
  Vector operator()(const sym::MoebiusAuto& m) const {
    return alpha(Automorphism(m.a), x);
  }
  Vector operator()(const sym::Conjugated& c) const {
    const Automorphism p(c.a);
    return alpha(p, apply(*c.inner, alpha(p, x), dim_cap));
  }
  Vector operator()(const sym::Composite& c) const {
    Vector cur = x;
    for (const Symbol& part : c.parts) cur = apply(part, cur, dim_cap);
    return cur;
  }
};

struct PolynomialVisitor {
  bool operator()(const sym::MoebiusAuto&) const { return false; }
  bool operator()(const sym::Conjugated&) const { return false; }
  bool operator()(const sym::Composite& c) const {
    for (const Symbol& part : c.parts)
      if (!is_polynomial(part)) return false;
    return true;
  }
  template <class T>
  bool operator()(const T&) const {
    return true;
  }
};

}  // namespace

Symbol::Symbol(sym::Variant v) : v_(std::move(v)) { validate(v_); }

bool is_polynomial(const Symbol& s) { return std::visit(PolynomialVisitor{}, s.variant()); }

Vector apply(const Symbol& s, const Vector& x, std::size_t dim_cap) {
  if (!(norm(x) < 1.0)) throw std::domain_error("point is not inside the open unit ball");
  return std::visit(ApplyVisitor{x, dim_cap}, s.variant());
}

Orbit iterate(const Symbol& s, const Vector& x, int n, std::size_t dim_cap) {
  if (n < 0) throw std::invalid_argument("iterate requires n >= 0");
  Orbit orbit{x, {x}, {norm(x)}};
  orbit.points.reserve(static_cast<std::size_t>(n) + 1);
  orbit.norms.reserve(static_cast<std::size_t>(n) + 1);
  Vector cur = x;
  for (int k = 0; k < n; ++k) {
    cur = apply(s, cur, dim_cap);
    orbit.points.push_back(cur);
    orbit.norms.push_back(norm(cur));
  }
  return orbit;
}

Symbol conjugate(const Vector& a, const Symbol& s) {
  return Symbol(sym::Conjugated{a, std::make_shared<const Symbol>(s)});
}

Vector fixed_point(const Symbol& s, SpaceKind space, double tol, int max_iter,
                   std::size_t dim_cap) {
  if (!(tol > 0.0)) throw std::invalid_argument("fixed_point requires tol > 0");
  Vector cur = Vector::zero(1, space);
  for (int k = 0; k < max_iter; ++k) {
    Vector next = apply(s, cur, dim_cap);
    if (distance(next, cur) < tol) return next;
    cur = std::move(next);
  }
  throw std::runtime_error("not contracting at this scale");
}

double schwarz_profile(const Symbol& s, const PointSet& samples, std::size_t dim_cap) {
  if (samples.points.empty()) throw std::invalid_argument("schwarz_profile requires samples");
  const Vector zero = Vector::zero(1, samples.points.front().space());
  if (norm(apply(s, zero, dim_cap)) > 1e-12)
    throw std::invalid_argument("Schwarz hypothesis violated: symbol does not fix 0");
  double worst = 0.0;
  for (const Vector& x : samples.points) {
    const double nx = norm(x);
    if (nx == 0.0) continue;
    worst = std::max(worst, norm(apply(s, x, dim_cap)) / nx);
  }
  return worst;
}

StabilityReport stability_probe(const Symbol& s, const PointSet& seeds, int n_max,
                                double delta, std::size_t dim_cap) {
  if (seeds.points.empty()) throw std::invalid_argument("stability_probe requires seeds");
  StabilityReport report;
  report.delta = delta;
  report.n_max = n_max;
  report.seed_count = seeds.points.size();

  std::vector<Vector> all;
  for (const Vector& seed : seeds.points) {
    const Orbit orbit = iterate(s, seed, n_max, dim_cap);
    bool monotone = true;
    for (std::size_t k = 1; k < orbit.norms.size(); ++k) {
      report.sup_norm = std::max(report.sup_norm, orbit.norms[k]);
      if (orbit.norms[k] < orbit.norms[k - 1] - 1e-15) monotone = false;
    }
    report.sup_norm = std::max(report.sup_norm, orbit.norms.front());
    if (monotone && orbit.norms.back() >= 1.0 - delta) report.escape = true;
    all.insert(all.end(), orbit.points.begin(), orbit.points.end());
  }

  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      sep = std::min(sep, distance(all[i], all[j]));
  report.min_separation = all.size() > 1 ? sep : 0.0;
  report.ball_stable_evidence = report.sup_norm <= 1.0 - delta;
  return report;
}

}  // namespace ballerg
