#include <benchmark/benchmark.h>

#include <random>

#include "ballerg/dynamics.hpp"
#include "ballerg/moebius.hpp"
#include "ballerg/rng.hpp"

using namespace ballerg;

namespace {

PolyFn sparse_poly(std::size_t n_terms, std::size_t dim, unsigned max_degree,
                   std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<std::size_t> pick_index(0, dim - 1);
  std::uniform_int_distribution<unsigned> pick_deg(1, max_degree);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  PolyFn f;
  while (f.terms().size() < n_terms) {
    std::vector<MultiIndex::Entry> entries;
    const unsigned deg = pick_deg(engine);
    for (unsigned d = 0; d < deg; ++d) entries.emplace_back(pick_index(engine), 1);
    f.add_term(MultiIndex(std::move(entries)), cdouble{coeff(engine), coeff(engine)});
  }
  return f;
}

void BM_ComposeForwardShift(benchmark::State& state) {
  const PolyFn f = sparse_poly(static_cast<std::size_t>(state.range(0)), 32, 4, 1);
  const Symbol shift{sym::ForwardShift{}};
  for (auto _ : state) benchmark::DoNotOptimize(compose_exact(f, shift));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComposeForwardShift)->Arg(16)->Arg(256)->Arg(4096);

void BM_ComposeCoordinateSquare(benchmark::State& state) {
  const PolyFn f = sparse_poly(static_cast<std::size_t>(state.range(0)), 32, 4, 2);
  const Symbol square{sym::CoordinateSquare{}};
  for (auto _ : state) benchmark::DoNotOptimize(compose_exact(f, square));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComposeCoordinateSquare)->Arg(16)->Arg(256)->Arg(4096);

void BM_ComposeDiagonal(benchmark::State& state) {
  const PolyFn f = sparse_poly(static_cast<std::size_t>(state.range(0)), 32, 4, 3);
  const Symbol diag{sym::DiagonalLinear{{0.9, 0.5, 0.7}}};
  for (auto _ : state) benchmark::DoNotOptimize(compose_exact(f, diag));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComposeDiagonal)->Arg(16)->Arg(256)->Arg(4096);

void BM_ComposeAffineBinomial(benchmark::State& state) {
  // pure powers of x0: exercises the binomial expansion path
  PolyFn f;
  for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(state.range(0)); ++k)
    f.add_term(MultiIndex::single(0, k), cdouble{1.0 / static_cast<double>(k), 0.0});
  const Symbol affine{sym::AffineHalf{}};
  for (auto _ : state) benchmark::DoNotOptimize(compose_exact(f, affine));
}
BENCHMARK(BM_ComposeAffineBinomial)->Arg(4)->Arg(16)->Arg(64);

void BM_EvalSparsePoly(benchmark::State& state) {
  const PolyFn f = sparse_poly(static_cast<std::size_t>(state.range(0)), 32, 4, 4);
  const Vector x = rng::sphere_point(5, 0, 32, 0.7, SpaceKind::l2());
  for (auto _ : state) benchmark::DoNotOptimize(eval(f, x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalSparsePoly)->Arg(16)->Arg(256)->Arg(4096);

void BM_MoebiusAlpha(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const Automorphism p(rng::ball_point(6, 0, dim, 0.8, SpaceKind::l2()));
  const Vector x = rng::sphere_point(6, 1, dim, 0.5, SpaceKind::l2());
  for (auto _ : state) benchmark::DoNotOptimize(alpha(p, x));
}
BENCHMARK(BM_MoebiusAlpha)->Arg(8)->Arg(64)->Arg(256);

void BM_SeminormSphere(benchmark::State& state) {
  const PolyFn f = sparse_poly(64, 8, 3, 7);
  const PointSet pts = realize(SeminormSpec(
      SphereSample{0.5, static_cast<std::size_t>(state.range(0)), 9, 8, SpaceKind::l2()}));
  for (auto _ : state) benchmark::DoNotOptimize(seminorm(f, pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeminormSphere)->Arg(500)->Arg(2000);

void BM_CesaroTrace(benchmark::State& state) {
  const SeminormSpec spec(SphereSample{0.5, 200, 11, 8, SpaceKind::l2()});
  const Vector a = rng::ball_point(12, 0, 8, 0.6, SpaceKind::l2());
  const Symbol moeb{sym::MoebiusAuto{a}};
  const LimitCandidate half = LimitCandidate::half_sum_with_identity(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_cesaro_trace(PolyFn::coordinate(0), "x0", moeb, spec, half,
                                                  static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CesaroTrace)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
