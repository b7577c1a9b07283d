#include "ballerg/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ballerg {

SpaceKind SpaceKind::lp(double p) {
  if (std::isnan(p) || p < 1.0) throw std::invalid_argument("lp requires p >= 1");
  return SpaceKind(false, p);
}

SpaceKind SpaceKind::linf() { return lp(std::numeric_limits<double>::infinity()); }

SpaceKind SpaceKind::c0() { return SpaceKind(true, 0.0); }

bool SpaceKind::uses_sup_norm() const { return c0_ || std::isinf(p_); }

std::string SpaceKind::describe() const {
  if (c0_) return "c0";
  if (std::isinf(p_)) return "l_inf";
  return "l" + std::to_string(p_);
}

Vector::Vector(std::vector<cdouble> coords, SpaceKind space)
    : coords_(std::move(coords)), space_(space) {
  if (coords_.empty()) throw std::invalid_argument("Vector requires dim >= 1");
}

Vector Vector::zero(std::size_t dim, SpaceKind space) {
  if (dim == 0) throw std::invalid_argument("Vector requires dim >= 1");
  return Vector(std::vector<cdouble>(dim, cdouble{0.0, 0.0}), space);
}

Vector Vector::unit(std::size_t i, SpaceKind space) {
  std::vector<cdouble> c(i + 1, cdouble{0.0, 0.0});
  c[i] = cdouble{1.0, 0.0};
  return Vector(std::move(c), space);
}

Vector Vector::from_reals(const std::vector<double>& coords, SpaceKind space) {
  std::vector<cdouble> c(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = cdouble{coords[i], 0.0};
  return Vector(std::move(c), space);
}

Vector& Vector::operator+=(const Vector& o) {
  if (space_ != o.space_) throw std::invalid_argument("vector ambient spaces differ");
  if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size(), cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (space_ != o.space_) throw std::invalid_argument("vector ambient spaces differ");
  if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size(), cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(cdouble s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool Vector::operator==(const Vector& o) const {
  if (space_ != o.space_) return false;
  const std::size_t n = std::max(coords_.size(), o.coords_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (coord(i) != o.coord(i)) return false;
  return true;
}

PointSet PointSet::of(std::vector<Vector> points, std::string label) {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].space() != points[0].space())
      throw std::invalid_argument("PointSet requires a single ambient space");
  return PointSet{std::move(points), std::move(label)};
}

double norm(const Vector& v) {
  if (v.space().uses_sup_norm()) {
    double m = 0.0;
    for (const auto& c : v.coords()) m = std::max(m, std::abs(c));
    return m;
  }
  const double p = v.space().p();
  if (p == 2.0) {
    double s = 0.0;
    for (const auto& c : v.coords()) s += std::norm(c);
    return std::sqrt(s);
  }
  if (p == 1.0) {
    double s = 0.0;
    for (const auto& c : v.coords()) s += std::abs(c);
    return s;
  }
  double s = 0.0;
  for (const auto& c : v.coords()) s += std::pow(std::abs(c), p);
  return std::pow(s, 1.0 / p);
}

cdouble inner(const Vector& x, const Vector& a) {
  if (!x.space().is_hilbert() || !a.space().is_hilbert())
    throw std::invalid_argument("inner product requires l2");
  const std::size_t n = std::min(x.dim(), a.dim());
  cdouble s{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) s += x.coords()[i] * std::conj(a.coords()[i]);
  return s;
}

double distance(const Vector& u, const Vector& v) { return norm(u - v); }

double ball_margin(const PointSet& s) {
  if (s.points.empty()) throw std::invalid_argument("ball_margin of empty set");
  double m = 0.0;
  for (const auto& p : s.points) m = std::max(m, norm(p));
  return 1.0 - m;
}

}  // namespace ballerg
