#include <doctest.h>

#include <cmath>
#include <random>

#include "ballerg/functions.hpp"
#include "ballerg/rng.hpp"

using namespace ballerg;

namespace {
const SpaceKind l2 = SpaceKind::l2();
const SpaceKind c0 = SpaceKind::c0();

PolyFn random_poly(std::mt19937_64& engine, std::size_t dim, unsigned max_degree) {
  std::uniform_int_distribution<int> n_terms(1, 5);
  std::uniform_int_distribution<std::size_t> pick_index(0, dim - 1);
  std::uniform_int_distribution<unsigned> pick_deg(0, max_degree);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  PolyFn f;
  const int terms = n_terms(engine);
  for (int t = 0; t < terms; ++t) {
    std::vector<MultiIndex::Entry> entries;
    const unsigned deg = pick_deg(engine);
    for (unsigned d = 0; d < deg; ++d) entries.emplace_back(pick_index(engine), 1);
    f.add_term(MultiIndex(std::move(entries)), cdouble{coeff(engine), coeff(engine)});
  }
  return f;
}

Symbol random_poly_symbol(std::mt19937_64& engine) {
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  switch (pick(engine)) {
    case 0: return Symbol(sym::ForwardShift{});
    case 1: return Symbol(sym::BackwardShift{});
    case 2: return Symbol(sym::AffineHalf{});
    case 3: return Symbol(sym::AffineContracted{0.4, 0.3});
    case 4: return Symbol(sym::CoordinateSquare{});
    case 5: return Symbol(sym::CoordinatePower{3});
    case 6: return Symbol(sym::DiagonalLinear{{w(engine), w(engine), w(engine)}});
    default:
      return Symbol(sym::Composite{{Symbol(sym::DiagonalLinear{{0.7}}),
                                    Symbol(sym::ForwardShift{})}});
  }
}
}  // namespace

TEST_SUITE_BEGIN("functions");

TEST_CASE("multi-index canonical form") {
  const MultiIndex a({{3, 1}, {0, 2}, {3, 2}, {5, 0}});
  CHECK(a.entries().size() == 2);
  CHECK(a.exponent(0) == 2);
  CHECK(a.exponent(3) == 3);
  CHECK(a.exponent(5) == 0);
  CHECK(a.degree() == 5);
  CHECK(*a.min_support() == 0);
  CHECK(*a.max_support() == 3);
  CHECK(MultiIndex{}.is_constant());
  CHECK_FALSE(MultiIndex{}.min_support().has_value());

  CHECK(a.shifted_up().exponent(1) == 2);
  CHECK_THROWS_AS(a.shifted_down(), std::invalid_argument);
  CHECK(MultiIndex::single(2, 3).shifted_down() == MultiIndex::single(1, 3));
  CHECK(a.scaled(2).degree() == 10);
  CHECK_THROWS_AS(MultiIndex::single(0, 1ULL << 62).scaled(8), std::overflow_error);
}

TEST_CASE("eval") {
  CHECK(eval(PolyFn::constant({1.0, 0.0}), Vector::zero(3, c0)) == cdouble{1.0, 0.0});

  const double zm = 1.0 - 1.0 / 7.0;
  CHECK(eval(PolyFn::coordinate(0), Vector::from_reals({zm}, l2)) == cdouble{zm, 0.0});

  // x0^2 * x1 at (1/2, 1/3) = 1/12
  PolyFn f = PolyFn::monomial(MultiIndex({{0, 2}, {1, 1}}));
  CHECK(eval(f, Vector::from_reals({0.5, 1.0 / 3.0}, l2)).real() ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-15));

  // coordinates beyond dim read as zero
  CHECK(eval(PolyFn::coordinate(5), Vector::from_reals({0.5}, l2)) == cdouble{0.0, 0.0});
  CHECK(eval(PolyFn{}, Vector::from_reals({0.5}, l2)) == cdouble{0.0, 0.0});
}

TEST_CASE("polynomial arithmetic stays canonical") {
  PolyFn f = PolyFn::coordinate(0);
  f += PolyFn::constant({1.0, 0.0});
  const PolyFn sq = f * f;  // (1 + x0)^2
  CHECK(sq.terms().size() == 3);
  CHECK(sq.coeff(MultiIndex{}) == cdouble{1.0, 0.0});
  CHECK(sq.coeff(MultiIndex::single(0)) == cdouble{2.0, 0.0});
  CHECK(sq.coeff(MultiIndex::single(0, 2)) == cdouble{1.0, 0.0});

  PolyFn g = PolyFn::coordinate(1);
  g += PolyFn::monomial(MultiIndex::single(1), {-1.0, 0.0});
  CHECK(g.is_zero());  // exact cancellation drops the term

  CHECK(f.pow(3) == f * f * f);
  CHECK(f.pow(0) == PolyFn::constant({1.0, 0.0}));
}

TEST_CASE("compose_exact: shifts") {
  const Symbol fwd{sym::ForwardShift{}};
  CHECK(compose_exact(PolyFn::coordinate(0), fwd).is_zero());
  CHECK(compose_exact(PolyFn::coordinate(1), fwd) == PolyFn::coordinate(0));
  CHECK(compose_exact(PolyFn::coordinate(0), Symbol(sym::BackwardShift{})) ==
        PolyFn::coordinate(1));

  // mixed support: the x0 factor kills the whole monomial
  const PolyFn mixed = PolyFn::monomial(MultiIndex({{0, 1}, {2, 1}}));
  CHECK(compose_exact(mixed, fwd).is_zero());
  // constants survive shifting
  CHECK(compose_exact(PolyFn::constant({2.0, 1.0}), fwd) == PolyFn::constant({2.0, 1.0}));
}

TEST_CASE("compose_exact: powers, diagonal, affine, constant") {
  CHECK(compose_exact(PolyFn::coordinate(0), Symbol(sym::CoordinateSquare{})) ==
        PolyFn::monomial(MultiIndex::single(0, 2)));
  CHECK(compose_exact(PolyFn::monomial(MultiIndex({{0, 1}, {1, 2}})),
                      Symbol(sym::CoordinatePower{3})) ==
        PolyFn::monomial(MultiIndex({{0, 3}, {1, 6}})));

  const PolyFn f = PolyFn::monomial(MultiIndex({{0, 2}, {2, 1}}));
  const PolyFn scaled = compose_exact(f, Symbol(sym::DiagonalLinear{{0.5, 1.0, -0.5}}));
  CHECK(scaled.coeff(MultiIndex({{0, 2}, {2, 1}})) == cdouble{0.25 * -0.5, 0.0});

  // x0 . affine-half = 1/2 + x0/2; x0^2 . affine-half = (1/2 + x0/2)^2
  const PolyFn a1 = compose_exact(PolyFn::coordinate(0), Symbol(sym::AffineHalf{}));
  CHECK(a1.coeff(MultiIndex{}) == cdouble{0.5, 0.0});
  CHECK(a1.coeff(MultiIndex::single(0)) == cdouble{0.5, 0.0});
  const PolyFn a2 = compose_exact(PolyFn::monomial(MultiIndex::single(0, 2)),
                                  Symbol(sym::AffineHalf{}));
  CHECK(a2.coeff(MultiIndex{}) == cdouble{0.25, 0.0});
  CHECK(a2.coeff(MultiIndex::single(0)) == cdouble{0.5, 0.0});
  CHECK(a2.coeff(MultiIndex::single(0, 2)) == cdouble{0.25, 0.0});
  // any dependence beyond coordinate 0 dies under the affine map
  CHECK(compose_exact(PolyFn::coordinate(1), Symbol(sym::AffineHalf{})).is_zero());

  const Vector x0 = Vector::from_reals({0.3, 0.4}, c0);
  CHECK(compose_exact(PolyFn::coordinate(1), Symbol(sym::Constant{x0})) ==
        PolyFn::constant({0.4, 0.0}));
}

TEST_CASE("compose_exact: composite order and non-polynomial rejection") {
  // apply affine-half first, then backward shift: f . (B . A) = 0 for f = x0
  const Symbol ab{sym::Composite{{Symbol(sym::AffineHalf{}), Symbol(sym::BackwardShift{})}}};
  CHECK(compose_exact(PolyFn::coordinate(0), ab).is_zero());
  // backward shift first, then affine-half: x0 -> 1/2 + x1/2
  const Symbol ba{sym::Composite{{Symbol(sym::BackwardShift{}), Symbol(sym::AffineHalf{})}}};
  const PolyFn g = compose_exact(PolyFn::coordinate(0), ba);
  CHECK(g.coeff(MultiIndex{}) == cdouble{0.5, 0.0});
  CHECK(g.coeff(MultiIndex::single(1)) == cdouble{0.5, 0.0});

  CHECK_THROWS_WITH_AS(
      compose_exact(PolyFn::coordinate(0), Symbol(sym::MoebiusAuto{Vector::zero(2, l2)})),
      "exact composition unavailable; use pointwise", std::invalid_argument);
}

TEST_CASE("oracle equivalence: compose then eval == eval after apply") {
  std::mt19937_64 engine(41);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const PolyFn f = random_poly(engine, 6, 4);
    const Symbol s = random_poly_symbol(engine);
    const Vector x = rng::ball_point(41, static_cast<std::uint64_t>(trial), 6, 0.9, l2);
    const cdouble via_compose = eval(compose_exact(f, s), x);
    const cdouble via_apply = eval(f, apply(s, x));
    worst = std::max(worst, std::abs(via_compose - via_apply));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("monomial kill under the forward shift") {
  std::mt19937_64 engine(42);
  std::uniform_int_distribution<std::size_t> pick_index(0, 9);
  std::uniform_int_distribution<std::uint64_t> pick_exp(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MultiIndex::Entry> entries = {{pick_index(engine), pick_exp(engine)}};
    if (trial % 3 == 0) entries.push_back({pick_index(engine), pick_exp(engine)});
    const MultiIndex alpha(std::move(entries));
    const std::size_t n_min = *alpha.min_support() + 1;  // 1-based
    const std::size_t n_h = *alpha.max_support() + 1;

    PolyFn g = PolyFn::monomial(alpha);
    for (std::size_t n = 1; n <= n_h + 1; ++n) {
      g = compose_exact(g, Symbol(sym::ForwardShift{}));
      // the monomial dies exactly when the shift count reaches its lowest
      // support coordinate, in particular for every n >= n_h
      CHECK(g.is_zero() == (n >= n_min));
    }
  }
}

TEST_CASE("differential at zero") {
  CHECK(differential_at_zero(PolyFn::coordinate(0)) == Vector::unit(0, l2));
  CHECK(differential_at_zero(PolyFn::monomial(MultiIndex::single(0, 2))) ==
        Vector::zero(1, l2));

  PolyFn f = PolyFn::monomial(MultiIndex::single(1), {3.0, 0.0});
  f += PolyFn::monomial(MultiIndex({{0, 1}, {1, 1}}));
  CHECK(differential_at_zero(f) == Vector::unit(1, l2) * cdouble{3.0, 0.0});

  // linearity, exactly
  std::mt19937_64 engine(43);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyFn g = random_poly(engine, 5, 3);
    const PolyFn h = random_poly(engine, 5, 3);
    PolyFn combo = g;
    combo *= cdouble{2.0, 0.0};
    combo += h;
    const Vector lhs = differential_at_zero(combo);
    const Vector rhs = differential_at_zero(g) * cdouble{2.0, 0.0} + differential_at_zero(h);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("restriction of C_F to linear functionals is the backward shift") {
  // embed u as the linear polynomial J(u) = sum u_i x_i; then
  // d(J(u) . F)(0) recovers the backward shift of u
  std::mt19937_64 engine(47);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<cdouble> u(5);
    for (auto& z : u) z = cdouble{c(engine), c(engine)};
    PolyFn ju;
    for (std::size_t i = 0; i < u.size(); ++i)
      ju.add_term(MultiIndex::single(i), u[i]);

    const Vector got =
        differential_at_zero(compose_exact(ju, Symbol(sym::ForwardShift{})), l2);
    const Vector shifted(std::vector<cdouble>(u.begin() + 1, u.end()), l2);
    CHECK(got == shifted);
  }
}

TEST_CASE("seminorms") {
  const PolyFn f = PolyFn::coordinate(0);
  const PointSet half = PointSet::of({Vector::unit(0, l2) * cdouble{0.5, 0.0}});
  CHECK(seminorm(f, half) == 0.5);
  CHECK(seminorm(PolyFn{}, half) == 0.0);

  for (const SpaceKind space : {l2, c0, SpaceKind::l1()}) {
    const SeminormSpec spec(SphereSample{0.7, 500, 5, 6, space});
    CHECK(seminorm(f, spec) <= 0.7 + 1e-12);  // |x0| <= norm in every ambient
  }

  // deterministic in the seed
  const SeminormSpec spec(SphereSample{0.5, 100, 9, 4, l2});
  CHECK(seminorm(f, spec) == seminorm(f, spec));

  CHECK_THROWS_AS(SeminormSpec(SphereSample{1.2, 10, 0, 2, l2}), std::invalid_argument);
  CHECK_THROWS_AS(SeminormSpec(SphereSample{0.5, 0, 0, 2, l2}), std::invalid_argument);
  CHECK_THROWS_AS(SeminormSpec(ExplicitPoints{PointSet{{}, ""}}), std::invalid_argument);
}

TEST_CASE("monomial ball sups") {
  CHECK(monomial_ball_sup(MultiIndex{}, l2) == 1.0);
  CHECK(monomial_ball_sup(MultiIndex::single(3), l2) == 1.0);
  CHECK(monomial_ball_sup(MultiIndex::single(0, 5), c0) == 1.0);
  CHECK(monomial_ball_sup(MultiIndex({{0, 1}, {1, 1}}), l2) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(monomial_ball_sup(MultiIndex({{0, 1}, {1, 1}}), SpaceKind::l1()) ==
        doctest::Approx(0.25).epsilon(1e-14));

  // sampled sups never exceed the closed form and get close to it
  const MultiIndex alpha({{0, 1}, {1, 1}});
  const double sup = monomial_ball_sup(alpha, l2);
  double sampled = 0.0;
  for (std::uint64_t i = 0; i < 4000; ++i) {
    const Vector x = rng::sphere_point(44, i, 2, 0.999, l2);
    sampled = std::max(sampled, std::abs(eval(PolyFn::monomial(alpha), x)));
  }
  CHECK(sampled <= sup + 1e-12);
  CHECK(sampled >= 0.9 * sup);
}

TEST_CASE("monomial dictionary") {
  const Dictionary dict = monomial_dictionary(8, 2, c0);
  CHECK(dict.entries.size() == 45);  // 1 + 8 + 36
  for (const auto& e : dict.entries) {
    CHECK(e.sup_norm == 1.0);
    // c0 monomials are already sup-normalized
    CHECK(e.fn.terms().begin()->second == cdouble{1.0, 0.0});
  }

  const Dictionary l2dict = monomial_dictionary(2, 2, l2);
  for (const auto& e : l2dict.entries) {
    double sampled = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i)
      sampled = std::max(sampled, std::abs(eval(e.fn, rng::sphere_point(45, i, 2, 0.999, l2))));
    CHECK(sampled <= 1.0 + 1e-9);
  }

  CHECK_THROWS_AS(Dictionary::of({{"x", PolyFn::coordinate(0), 1.0},
                                  {"x", PolyFn::coordinate(1), 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("hull membership") {
  const PointSet A = PointSet::of({Vector::from_reals({0.5}, l2)});
  const Dictionary dict = Dictionary::of({{"x0", PolyFn::coordinate(0), 1.0}});
  CHECK(hull_membership(Vector::from_reals({0.5}, l2), A, dict));
  CHECK(hull_membership(Vector::from_reals({0.4}, l2), A, dict));
  CHECK_FALSE(hull_membership(Vector::from_reals({0.6}, l2), A, dict));
  CHECK_THROWS_AS(hull_membership(Vector::from_reals({0.5}, l2), PointSet{{}, ""}, dict),
                  std::invalid_argument);

  // enlarging the dictionary never adds members; enlarging A never removes them
  const Dictionary bigger =
      Dictionary::of({{"x0", PolyFn::coordinate(0), 1.0},
                      {"x0^2", PolyFn::monomial(MultiIndex::single(0, 2)), 1.0}});
  const PointSet biggerA =
      PointSet::of({Vector::from_reals({0.5}, l2), Vector::from_reals({0.7}, l2)});
  for (int i = -9; i <= 9; ++i) {
    const Vector x = Vector::from_reals({0.1 * i}, l2);
    if (hull_membership(x, A, bigger)) CHECK(hull_membership(x, A, dict));
    if (hull_membership(x, A, dict)) CHECK(hull_membership(x, biggerA, dict));
  }
}

TEST_SUITE_END();
