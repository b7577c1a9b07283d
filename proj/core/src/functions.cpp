#include "ballerg/functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ballerg/rng.hpp"

namespace ballerg {

MultiIndex::MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& [idx, exp] : entries_) {
    if (exp == 0) continue;
    if (!merged.empty() && merged.back().first == idx)
      merged.back().second += exp;
    else
      merged.emplace_back(idx, exp);
  }
  entries_ = std::move(merged);
}

MultiIndex MultiIndex::single(std::size_t index, std::uint64_t exp) {
  return MultiIndex({{index, exp}});
}

std::uint64_t MultiIndex::degree() const {
  std::uint64_t d = 0;
  for (const auto& [idx, exp] : entries_) d += exp;
  return d;
}

std::uint64_t MultiIndex::exponent(std::size_t index) const {
  for (const auto& [idx, exp] : entries_)
    if (idx == index) return exp;
  return 0;
}

std::optional<std::size_t> MultiIndex::min_support() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

std::optional<std::size_t> MultiIndex::max_support() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.back().first;
}

MultiIndex MultiIndex::shifted_up() const {
  std::vector<Entry> e = entries_;
  for (auto& [idx, exp] : e) ++idx;
  MultiIndex out;
  out.entries_ = std::move(e);  // still sorted and canonical
  return out;
}

MultiIndex MultiIndex::shifted_down() const {
  if (!entries_.empty() && entries_.front().first == 0)
    throw std::invalid_argument("cannot shift a multi-index supported at coordinate 0");
  std::vector<Entry> e = entries_;
  for (auto& [idx, exp] : e) --idx;
  MultiIndex out;
  out.entries_ = std::move(e);
  return out;
}

MultiIndex MultiIndex::scaled(std::uint64_t m) const {
  std::vector<Entry> e = entries_;
  for (auto& [idx, exp] : e) {
    const std::uint64_t scaled = exp * m;
    if (m != 0 && scaled / m != exp) throw std::overflow_error("multi-index exponent overflow");
    exp = scaled;
  }
  MultiIndex out;
  out.entries_ = std::move(e);
  if (m == 0) out = MultiIndex(out.entries_);  // renormalize away zero exponents
  return out;
}

PolyFn PolyFn::constant(cdouble c) {
  PolyFn f;
  f.add_term(MultiIndex{}, c);
  return f;
}

PolyFn PolyFn::monomial(MultiIndex alpha, cdouble coeff) {
  PolyFn f;
  f.add_term(std::move(alpha), coeff);
  return f;
}

PolyFn PolyFn::coordinate(std::size_t i) { return monomial(MultiIndex::single(i)); }

std::uint64_t PolyFn::degree() const {
  std::uint64_t d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

cdouble PolyFn::coeff(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? cdouble{0.0, 0.0} : it->second;
}

void PolyFn::add_term(MultiIndex alpha, cdouble c) {
  if (c == cdouble{0.0, 0.0}) return;
  auto [it, inserted] = terms_.emplace(std::move(alpha), c);
  if (!inserted) {
    it->second += c;
    if (it->second == cdouble{0.0, 0.0}) terms_.erase(it);
  }
}

PolyFn& PolyFn::operator+=(const PolyFn& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

PolyFn& PolyFn::operator*=(cdouble s) {
  if (s == cdouble{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= s;
  return *this;
}

PolyFn PolyFn::operator*(const PolyFn& o) const {
  PolyFn out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      std::vector<MultiIndex::Entry> e = a.entries();
      e.insert(e.end(), b.entries().begin(), b.entries().end());
      out.add_term(MultiIndex(std::move(e)), ca * cb);
    }
  return out;
}

PolyFn PolyFn::pow(std::uint64_t k) const {
  PolyFn out = PolyFn::constant({1.0, 0.0});
  for (std::uint64_t i = 0; i < k; ++i) out = out * (*this);
  return out;
}

cdouble cpow(cdouble z, std::uint64_t e) {
  cdouble result{1.0, 0.0};
  cdouble base = z;
  while (e > 0) {
    if (e & 1ULL) result *= base;
    e >>= 1ULL;
    if (e > 0) base *= base;
  }
  return result;
}

cdouble eval(const PolyFn& f, const Vector& x) {
  cdouble sum{0.0, 0.0};
  for (const auto& [alpha, c] : f.terms()) {
    cdouble term = c;
    for (const auto& [idx, exp] : alpha.entries()) term *= cpow(x.coord(idx), exp);
    sum += term;
  }
  return sum;
}

SeminormSpec::SeminormSpec(ExplicitPoints pts) : v_(std::move(pts)) {
  const auto& p = std::get<ExplicitPoints>(v_).points;
  if (p.points.empty()) throw std::invalid_argument("seminorm spec requires points");
}

SeminormSpec::SeminormSpec(SphereSample sample) : v_(sample) {
  if (!(sample.t > 0.0 && sample.t < 1.0))
    throw std::invalid_argument("sphere sample requires 0 < t < 1");
  if (sample.count < 1) throw std::invalid_argument("sphere sample requires count >= 1");
  if (sample.dim < 1) throw std::invalid_argument("sphere sample requires dim >= 1");
}

SpaceKind SeminormSpec::space() const {
  if (const auto* e = std::get_if<ExplicitPoints>(&v_)) return e->points.points.front().space();
  return std::get<SphereSample>(v_).space;
}

std::string SeminormSpec::describe() const {
  std::ostringstream os;
  if (const auto* e = std::get_if<ExplicitPoints>(&v_)) {
    os << "points[" << e->points.points.size() << "]";
    if (!e->points.label.empty()) os << " " << e->points.label;
  } else {
    const auto& s = std::get<SphereSample>(v_);
    os << "sphere(t=" << s.t << ", count=" << s.count << ", seed=" << s.seed
       << ", dim=" << s.dim << ", " << s.space.describe() << ")";
  }
  return os.str();
}

PointSet realize(const SeminormSpec& spec) {
  if (const auto* e = std::get_if<ExplicitPoints>(&spec.variant())) return e->points;
  const auto& s = std::get<SphereSample>(spec.variant());
  std::vector<Vector> pts;
  pts.reserve(s.count);
  for (std::size_t i = 0; i < s.count; ++i)
    pts.push_back(rng::sphere_point(s.seed, i, s.dim, s.t, s.space));
  return PointSet::of(std::move(pts), "sphere sample");
}

double seminorm(const PolyFn& f, const PointSet& pts) {
  double m = 0.0;
  for (const Vector& x : pts.points) m = std::max(m, std::abs(eval(f, x)));
  return m;
}

double seminorm(const PolyFn& f, const SeminormSpec& spec) { return seminorm(f, realize(spec)); }

namespace {

double real_ipow(double w, std::uint64_t e) {
  double result = 1.0;
  double base = w;
  while (e > 0) {
    if (e & 1ULL) result *= base;
    e >>= 1ULL;
    if (e > 0) base *= base;
  }
  return result;
}

struct ComposeVisitor {
  const PolyFn& f;

  PolyFn operator()(const sym::ForwardShift&) const {
    PolyFn out;
    for (const auto& [alpha, c] : f.terms()) {
      if (alpha.exponent(0) > 0) continue;  // (Fx)_0 = 0 kills the term
      out.add_term(alpha.is_constant() ? alpha : alpha.shifted_down(), c);
    }
    return out;
  }
  PolyFn operator()(const sym::BackwardShift&) const {
    PolyFn out;
    for (const auto& [alpha, c] : f.terms()) out.add_term(alpha.shifted_up(), c);
    return out;
  }
  PolyFn operator()(const sym::AffineHalf&) const {
    return affine(0.5, 0.5);
  }
  PolyFn operator()(const sym::AffineContracted& a) const { return affine(a.c, a.b); }
  PolyFn operator()(const sym::CoordinateSquare&) const { return power(2); }
  PolyFn operator()(const sym::CoordinatePower& p) const {
    return power(static_cast<std::uint64_t>(p.m));
  }
  PolyFn operator()(const sym::DiagonalLinear& d) const {
    PolyFn out;
    for (const auto& [alpha, c] : f.terms()) {
      cdouble scaled = c;
      for (const auto& [idx, exp] : alpha.entries())
        scaled *= real_ipow(d.weights[std::min(idx, d.weights.size() - 1)], exp);
      out.add_term(alpha, scaled);
    }
    return out;
  }
  PolyFn operator()(const sym::Constant& c) const { return PolyFn::constant(eval(f, c.x0)); }
  PolyFn operator()(const sym::MoebiusAuto&) const { return unavailable(); }
  PolyFn operator()(const sym::Conjugated&) const { return unavailable(); }
  PolyFn operator()(const sym::Composite& co) const {
    // f . (s_k ... s_1 applied in order) = ((f . s_k) . ...) . s_1
    PolyFn cur = f;
    for (auto it = co.parts.rbegin(); it != co.parts.rend(); ++it)
      cur = compose_exact(cur, *it);
    return cur;
  }

  PolyFn power(std::uint64_t m) const {
    PolyFn out;
    for (const auto& [alpha, c] : f.terms()) out.add_term(alpha.scaled(m), c);
    return out;
  }

  PolyFn affine(double c, double b) const {
    // image coordinates: (c x0 + b, 0, 0, ...)
    PolyFn first;
    first.add_term(MultiIndex{}, cdouble{b, 0.0});
    first.add_term(MultiIndex::single(0), cdouble{c, 0.0});
    PolyFn out;
    for (const auto& [alpha, coeff] : f.terms()) {
      if (const auto mx = alpha.max_support(); mx.has_value() && *mx > 0)
        continue;  // touches a coordinate that maps to 0
      PolyFn term = first.pow(alpha.exponent(0));
      term *= coeff;
      out += term;
    }
    return out;
  }

  [[noreturn]] PolyFn unavailable() const {
    throw std::invalid_argument("exact composition unavailable; use pointwise");
  }
};

}  // namespace

PolyFn compose_exact(const PolyFn& f, const Symbol& s) {
  if (!is_polynomial(s))
    throw std::invalid_argument("exact composition unavailable; use pointwise");
  return std::visit(ComposeVisitor{f}, s.variant());
}

Vector differential_at_zero(const PolyFn& f, SpaceKind space) {
  std::size_t dim = 1;
  for (const auto& [alpha, c] : f.terms())
    if (alpha.degree() == 1) dim = std::max(dim, *alpha.max_support() + 1);
  Vector out = Vector::zero(dim, space);
  std::vector<cdouble> coords(out.coords());
  for (const auto& [alpha, c] : f.terms())
    if (alpha.degree() == 1) coords[alpha.entries().front().first] = c;
  return Vector(std::move(coords), space);
}

Dictionary Dictionary::of(std::vector<DictionaryEntry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].label == entries[j].label)
        throw std::invalid_argument("dictionary labels must be unique");
  return Dictionary{std::move(entries)};
}

double monomial_ball_sup(const MultiIndex& alpha, SpaceKind space) {
  if (alpha.is_constant()) return 1.0;
  if (space.uses_sup_norm()) return 1.0;
  const double p = space.p();
  const double total = static_cast<double>(alpha.degree());
  double log_sup = 0.0;
  for (const auto& [idx, exp] : alpha.entries()) {
    const double a = static_cast<double>(exp);
    log_sup += (a / p) * (std::log(a) - std::log(total));
  }
  return std::exp(log_sup);
}

namespace {

std::string monomial_label(const MultiIndex& alpha) {
  if (alpha.is_constant()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, exp] : alpha.entries()) {
    if (!first) os << "*";
    os << "x" << idx;
    if (exp > 1) os << "^" << exp;
    first = false;
  }
  return os.str();
}

void enumerate_indices(std::size_t dim, unsigned max_degree, std::size_t from,
                       std::vector<MultiIndex::Entry>& stack,
                       std::vector<MultiIndex>& out) {
  out.emplace_back(std::vector<MultiIndex::Entry>(stack));
  if (max_degree == 0) return;
  for (std::size_t i = from; i < dim; ++i) {
    stack.emplace_back(i, 1);
    enumerate_indices(dim, max_degree - 1, i, stack, out);
    stack.pop_back();
  }
}

}  // namespace

Dictionary monomial_dictionary(std::size_t dim, unsigned max_degree, SpaceKind space) {
  std::vector<MultiIndex::Entry> stack;
  std::vector<MultiIndex> indices;
  enumerate_indices(dim, max_degree, 0, stack, indices);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  std::vector<DictionaryEntry> entries;
  entries.reserve(indices.size());
  for (const MultiIndex& alpha : indices) {
    const double sup = monomial_ball_sup(alpha, space);
    entries.push_back({monomial_label(alpha),
                       PolyFn::monomial(alpha, cdouble{1.0 / sup, 0.0}), 1.0});
  }
  return Dictionary::of(std::move(entries));
}

bool hull_membership(const Vector& x, const PointSet& A, const Dictionary& dict) {
  if (A.points.empty()) throw std::invalid_argument("hull membership requires a nonempty set");
  for (const auto& entry : dict.entries) {
    double sup = 0.0;
    for (const Vector& y : A.points) sup = std::max(sup, std::abs(eval(entry.fn, y)));
    if (std::abs(eval(entry.fn, x)) > sup + 1e-12) return false;
  }
  return true;
}

}  // namespace ballerg
