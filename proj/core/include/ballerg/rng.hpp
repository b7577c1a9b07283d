#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ballerg/spaces.hpp"

// Deterministic seeded sampling. Every sampled point derives its own RNG
// stream from (seed, index), so realized point sets do not depend on
// evaluation order or thread count.
namespace ballerg::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x51ed270b66a4f1d3ULL));
}

// Standard normal draws via explicit Box-Muller on top of mt19937_64, so the
// byte stream is fixed by the seed alone (std::normal_distribution is
// implementation-defined).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    // in (0,1]: avoids log(0)
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  cdouble complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// A pseudo-random direction with complex phases, scaled to exact ambient
// norm t. Stream identity is (seed, index).
inline Vector sphere_point(std::uint64_t seed, std::uint64_t index, std::size_t dim,
                           double t, SpaceKind space) {
  GaussianStream g(derive_seed(seed, index));
  std::vector<cdouble> c(dim);
  for (;;) {
    for (auto& z : c) z = g.complex_normal();
    Vector v(c, space);
    const double n = norm(v);
    if (n > 0.0) {
      v *= cdouble{t / n, 0.0};
      return v;
    }
  }
}

// A point of norm at most r (radius scaled by a uniform draw).
inline Vector ball_point(std::uint64_t seed, std::uint64_t index, std::size_t dim,
                         double r, SpaceKind space) {
  GaussianStream g(derive_seed(seed, index ^ 0xb5ad4eceda1ce2a9ULL));
  const double u = g.uniform01();
  return sphere_point(seed, index, dim, r * u, space);
}

}  // namespace ballerg::rng
