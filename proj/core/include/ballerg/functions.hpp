#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ballerg/spaces.hpp"
#include "ballerg/symbols.hpp"

// Sparse multi-index polynomials sum_alpha c_alpha x^alpha, the dictionary
// elements the composition operators act on. Coordinates are 0-indexed
// everywhere (x0 is the first coordinate). Composition with polynomial
// symbols is exact in the monomial basis; seminorms are sups over finite
// point sets or deterministic sphere samples.
namespace ballerg {

// Finitely supported exponent map; canonical (sorted indices, no zero
// exponents), so ordering and equality are structural.
class MultiIndex {
 public:
  using Entry = std::pair<std::size_t, std::uint64_t>;

  MultiIndex() = default;  // the constant monomial
  // Normalizes: sorts by index, merges duplicates, drops zero exponents.
  explicit MultiIndex(std::vector<Entry> entries);
  static MultiIndex single(std::size_t index, std::uint64_t exp = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_constant() const { return entries_.empty(); }
  std::uint64_t degree() const;
  std::uint64_t exponent(std::size_t index) const;
  std::optional<std::size_t> min_support() const;
  std::optional<std::size_t> max_support() const;

  MultiIndex shifted_up() const;   // index -> index + 1
  MultiIndex shifted_down() const;  // index -> index - 1; requires min_support >= 1
  MultiIndex scaled(std::uint64_t m) const;  // exponents *= m, overflow-checked

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<Entry> entries_;
};

class PolyFn {
 public:
  PolyFn() = default;  // the zero polynomial
  static PolyFn constant(cdouble c);
  static PolyFn monomial(MultiIndex alpha, cdouble coeff = {1.0, 0.0});
  static PolyFn coordinate(std::size_t i);  // x_i

  const std::map<MultiIndex, cdouble>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const;
  cdouble coeff(const MultiIndex& alpha) const;
  void add_term(MultiIndex alpha, cdouble c);  // drops terms cancelling to exact zero

  PolyFn& operator+=(const PolyFn& o);
  PolyFn& operator*=(cdouble s);
  friend PolyFn operator+(PolyFn a, const PolyFn& b) { return a += b; }
  friend PolyFn operator*(cdouble s, PolyFn f) { return f *= s; }
  PolyFn operator*(const PolyFn& o) const;
  PolyFn pow(std::uint64_t k) const;

  bool operator==(const PolyFn&) const = default;

 private:
  std::map<MultiIndex, cdouble> terms_;
};

// z^e by binary exponentiation; e = 2^k costs exactly k squarings, matching
// the arithmetic of iterated coordinate squaring.
cdouble cpow(cdouble z, std::uint64_t e);

// sum_alpha c_alpha prod_i x_i^{alpha_i}; coordinates beyond dim(x) read 0.
cdouble eval(const PolyFn& f, const Vector& x);

// Discretized seminorm domain: an explicit finite point set, or a
// deterministic sample of `count` points of exact norm t (complex gaussian
// directions, per-point streams derived from (seed, index)).
struct ExplicitPoints {
  PointSet points;
};
struct SphereSample {
  double t;
  std::size_t count;
  std::uint64_t seed;
  std::size_t dim;
  SpaceKind space;
};

class SeminormSpec {
 public:
  SeminormSpec(ExplicitPoints pts);   // NOLINT(google-explicit-constructor)
  SeminormSpec(SphereSample sample);  // NOLINT(google-explicit-constructor)

  const std::variant<ExplicitPoints, SphereSample>& variant() const { return v_; }
  SpaceKind space() const;
  std::string describe() const;

 private:
  std::variant<ExplicitPoints, SphereSample> v_;
};

PointSet realize(const SeminormSpec& spec);

// sup |f| over the realized points.
double seminorm(const PolyFn& f, const PointSet& pts);
double seminorm(const PolyFn& f, const SeminormSpec& spec);

// The exact polynomial f . s in the monomial basis; requires a polynomial
// symbol (throws std::invalid_argument "exact composition unavailable; use
// pointwise" otherwise). Forward shift kills any monomial touching the first
// coordinate and moves the rest down; coordinate powers scale exponents;
// diagonal maps scale coefficients; affine maps expand binomially.
PolyFn compose_exact(const PolyFn& f, const Symbol& s);

// Vector of degree-1 coefficients (coordinate i <- coefficient of x_i);
// constant and higher-order terms are ignored.
Vector differential_at_zero(const PolyFn& f, SpaceKind space = SpaceKind::l2());

struct DictionaryEntry {
  std::string label;
  PolyFn fn;
  double sup_norm;  // recorded estimate of sup |fn| over the unit ball
};

struct Dictionary {
  std::vector<DictionaryEntry> entries;
  static Dictionary of(std::vector<DictionaryEntry> entries);  // unique labels
};

// Exact sup of |x^alpha| over the closed unit ball: 1 for c0 / l_inf,
// prod (alpha_i/|alpha|)^(alpha_i/p) for lp.
double monomial_ball_sup(const MultiIndex& alpha, SpaceKind space);

// All monomials of degree <= max_degree in the first dim coordinates,
// scaled so that every recorded sup_norm is exactly 1.
Dictionary monomial_dictionary(std::size_t dim, unsigned max_degree, SpaceKind space);

// True iff |f(x)| <= sup_{y in A} |f(y)| + 1e-12 for every f in the
// dictionary: the finite-dictionary relaxation of the holomorphic hull.
bool hull_membership(const Vector& x, const PointSet& A, const Dictionary& dict);

}  // namespace ballerg
