#include <doctest.h>

#include <cmath>

#include "ballerg/moebius.hpp"
#include "ballerg/rng.hpp"
#include "ballerg/spaces.hpp"

using namespace ballerg;

namespace {
const SpaceKind l2 = SpaceKind::l2();
}

TEST_SUITE_BEGIN("moebius");

TEST_CASE("gamma fixes its center and is non-expansive") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 8;
    const Vector a = rng::ball_point(21, 2 * i, d, 0.9, l2);
    const Vector x = rng::ball_point(21, 2 * i + 1, d, 0.95, l2);
    const Automorphism p(a);
    CHECK(distance(gamma(p, a), a) <= 1e-12);
    CHECK(norm(gamma(p, x)) <= norm(x) + 1e-12);
  }
}

TEST_CASE("gamma with center 0 is the identity") {
  const Automorphism p(Vector::zero(3, l2));
  CHECK(p.v() == 1.0);
  const Vector x = rng::sphere_point(22, 0, 3, 0.7, l2);
  CHECK(distance(gamma(p, x), x) == 0.0);
}

TEST_CASE("alpha swaps 0 and a") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t d = 1 + i % 16;
    const Vector a = rng::ball_point(23, i, d, 0.9, l2);
    const Automorphism p(a);
    CHECK(distance(alpha(p, Vector::zero(d, l2)), a) <= 1e-12);
    CHECK(norm(alpha(p, a)) <= 1e-12);
  }
}

TEST_CASE("one-dimensional closed form") {
  // d = 1, a = 0.5, x = 0.25: (a - x)/(1 - a x) = 0.25/0.875 = 2/7
  const Automorphism p(Vector::from_reals({0.5}, l2));
  const Vector img = alpha(p, Vector::from_reals({0.25}, l2));
  const double oracle = (0.5 - 0.25) / (1.0 - 0.5 * 0.25);
  CHECK(img.coord(0).real() == doctest::Approx(oracle).epsilon(1e-15));
  CHECK(img.coord(0).real() == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  CHECK(img.coord(0).imag() == 0.0);

  // random real a, x: alpha reduces to the scalar Moebius map exactly
  for (int i = 0; i < 200; ++i) {
    const double a = -0.95 + 1.9 * (i / 199.0);
    const double x = 0.93 * std::sin(3.7 * i);
    const Automorphism q(Vector::from_reals({a}, l2));
    const Vector y = alpha(q, Vector::from_reals({x}, l2));
    CHECK(y.coord(0).real() == doctest::Approx((a - x) / (1.0 - a * x)).epsilon(1e-12));
  }
}

TEST_CASE("rho_bound values and domain") {
  CHECK(rho_bound(0.0) == 0.0);
  CHECK(rho_bound(0.5) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(rho_bound(0.75) == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-15));
  CHECK(rho_bound(0.5) == doctest::Approx(0.8660254037844386).epsilon(1e-15));
  CHECK(rho_bound(0.75) == doctest::Approx(0.9682458365518543).epsilon(1e-15));
  CHECK_THROWS_AS(rho_bound(-0.1), std::domain_error);
  CHECK_THROWS_AS(rho_bound(1.0), std::domain_error);
}

TEST_CASE("disc identity residual") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Vector a = rng::ball_point(24, i, 4, 0.9, l2);
    const Automorphism p(a);
    CHECK(disc_identity_residual(p, a) <= 1e-12);            // y = 0, both sides 1
    CHECK(disc_identity_residual(p, Vector::zero(4, l2)) <= 1e-12);  // both sides 1 - ||a||^2
  }
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const std::size_t d = 1 + i % 32;
    const Automorphism p(rng::ball_point(25, 2 * i, d, 0.95, l2));
    worst = std::max(worst, disc_identity_residual(p, rng::ball_point(25, 2 * i + 1, d, 0.95, l2)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("involution") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::size_t d = 1 + i % 16;
    const Vector a = rng::ball_point(26, 2 * i, d, 0.95, l2);
    const Vector x = rng::ball_point(26, 2 * i + 1, d, 0.95, l2);
    const Automorphism p(a);
    CHECK(distance(alpha(p, alpha(p, x)), x) <= 1e-10);
  }
}

TEST_CASE("radius stability: alpha_a(rB) inside rho(r)B") {
  for (int ri = 1; ri <= 9; ++ri) {
    const double r = 0.1 * ri;
    const double rho = rho_bound(r);
    for (std::uint64_t i = 0; i < 300; ++i) {
      const Vector a = rng::ball_point(27, 2 * i + 7000 * static_cast<std::uint64_t>(ri), 6, r, l2);
      const Vector x = rng::ball_point(27, 2 * i + 7000 * static_cast<std::uint64_t>(ri) + 1, 6, r, l2);
      CHECK(norm(alpha(Automorphism(a), x)) <= rho + 1e-12);
    }
  }
}

TEST_CASE("construction and singularity guards") {
  CHECK_THROWS_AS(Automorphism(Vector::unit(0, l2)), std::invalid_argument);       // norm 1
  CHECK_THROWS_AS(Automorphism(Vector::unit(0, SpaceKind::c0())), std::invalid_argument);
  const Automorphism p(Vector::from_reals({0.5}, l2));
  // <x, a> = 1 exactly for x = 2 e1: the pairing guard has to fire
  CHECK_THROWS_AS(alpha(p, Vector::from_reals({2.0}, l2)), std::domain_error);
}

TEST_CASE("automorphism parameter invariant") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Vector a = rng::ball_point(28, i, 5, 0.99, l2);
    const Automorphism p(a);
    const double na = norm(a);
    CHECK(p.v() > 0.0);
    CHECK(p.v() <= 1.0);
    CHECK(std::abs(p.v() * p.v() + na * na - 1.0) <= 1e-12);
  }
}

TEST_SUITE_END();
