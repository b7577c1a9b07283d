#pragma once

#include <complex>
#include <string>
#include <vector>

// Truncated sequence-space vectors: points of the open unit ball of lp
// (1 <= p <= inf) or c0, with complex coordinates. A vector owns its ambient
// space; trailing zeros never matter, so finite truncations stand in for
// finitely supported points of the infinite-dimensional ball.
namespace ballerg {

using cdouble = std::complex<double>;

class SpaceKind {
 public:
  static SpaceKind lp(double p);    // 1 <= p, p = inf allowed
  static SpaceKind linf();          // lp with the sup-norm sentinel
  static SpaceKind c0();
  static SpaceKind l1() { return lp(1.0); }
  static SpaceKind l2() { return lp(2.0); }

  bool is_c0() const { return c0_; }
  bool is_lp() const { return !c0_; }
  double p() const { return p_; }   // meaningful only for lp
  bool is_hilbert() const { return !c0_ && p_ == 2.0; }
  // c0 and l_inf both take the supremum norm.
  bool uses_sup_norm() const;

  bool operator==(const SpaceKind& o) const { return c0_ == o.c0_ && p_ == o.p_; }
  bool operator!=(const SpaceKind& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  SpaceKind(bool c0, double p) : c0_(c0), p_(p) {}
  bool c0_;
  double p_;  // 0 when c0
};

class Vector {
 public:
  Vector(std::vector<cdouble> coords, SpaceKind space);

  static Vector zero(std::size_t dim, SpaceKind space);
  // e_i with 0-based index i.
  static Vector unit(std::size_t i, SpaceKind space);
  static Vector from_reals(const std::vector<double>& coords, SpaceKind space);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<cdouble>& coords() const { return coords_; }
  SpaceKind space() const { return space_; }

  // Coordinates beyond dim() read as zero; this is the padding rule used
  // everywhere (norms, inner products, symbol application).
  cdouble coord(std::size_t i) const { return i < coords_.size() ? coords_[i] : cdouble{0.0, 0.0}; }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(cdouble s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(cdouble s, Vector v) { return v *= s; }
  friend Vector operator*(Vector v, cdouble s) { return v *= s; }

  // Equal up to trailing zeros, same ambient space, exact coordinates.
  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

 private:
  std::vector<cdouble> coords_;
  SpaceKind space_;
};

struct PointSet {
  std::vector<Vector> points;
  std::string label;

  // Validates that all points share one ambient space.
  static PointSet of(std::vector<Vector> points, std::string label = {});
};

// (sum |v_i|^p)^(1/p) for lp(p < inf), sup_i |v_i| for l_inf and c0.
double norm(const Vector& v);

// Hermitian pairing sum x_i * conj(a_i); requires both vectors in an l2
// ambient (throws std::invalid_argument otherwise).
cdouble inner(const Vector& x, const Vector& a);

// norm(u - v) in the shared ambient.
double distance(const Vector& u, const Vector& v);

// 1 - max norm over the set; a positive value certifies that the finite set
// is ball-bounded (bounded with positive distance to the unit sphere).
double ball_margin(const PointSet& s);

}  // namespace ballerg
