#include <benchmark/benchmark.h>

#include "lieforge/casimir.hpp"
#include "lieforge/catalog.hpp"
#include "lieforge/decompose.hpp"
#include "support/expressions.hpp"

namespace {

using namespace lieforge;

void BM_JacobiCheck(benchmark::State& state) {
  testing::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const AnchoredPair p = testing::random_pair(rng, n);
  const StructureConstants sc = structure_constants_of_pairs(std::span(&p, 1));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(sc));
}
BENCHMARK(BM_JacobiCheck)->DenseRange(2, 6);

void BM_DerivedSeries(benchmark::State& state) {
  testing::Rng rng(2);
  const StructureConstants sc = testing::random_jacobi_tensor(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derived_series(sc));
}
BENCHMARK(BM_DerivedSeries)->DenseRange(3, 5);

void BM_DecomposeRoundTrip(benchmark::State& state) {
  testing::Rng rng(3);
  const StructureConstants sc = testing::random_jacobi_tensor(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(decompose(sc)));
}
BENCHMARK(BM_DecomposeRoundTrip)->DenseRange(2, 5);

void BM_CompatibilityDefect(benchmark::State& state) {
  testing::Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const AnchoredPair p = testing::random_pair(rng, n);
  const AnchoredPair q = testing::random_pair(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(compatibility_defect(p, q));
}
BENCHMARK(BM_CompatibilityDefect)->DenseRange(3, 6);

void BM_VerifyCasimir(benchmark::State& state) {
  const CatalogEntry e = lookup("g3,7", {{"a", Rational(1, 2)}});
  for (auto _ : state) benchmark::DoNotOptimize(verify_casimir(e.commutators, e.casimirs.front()));
}
BENCHMARK(BM_VerifyCasimir);

void BM_HodgePoissonBracket(benchmark::State& state) {
  testing::Rng rng(5);
  const CatalogEntry e = lookup("g4,8");
  const Expr f = testing::random_quadratic(rng, 4);
  const Expr g = testing::random_quadratic(rng, 4);
  const Point p = testing::random_point(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_poisson_bracket(e.pairs, f, g, p));
}
BENCHMARK(BM_HodgePoissonBracket);

void BM_Gradient(benchmark::State& state) {
  const Expr e = parse_expr("(x1^2+x2^2)*exp(2*(1/2)*arctg(x1/x2))", 3);
  const Point p{1.2, 0.7, 1.9};
  for (auto _ : state) benchmark::DoNotOptimize(grad(e, p));
}
BENCHMARK(BM_Gradient);

void BM_ParseExpr(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_expr("x1*exp(-x2/x1)+x3^(1/2)*arctg(x1/x2)", 3));
}
BENCHMARK(BM_ParseExpr);

void BM_CatalogGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(testing::all_catalog_instances());
}
BENCHMARK(BM_CatalogGrid);

}  // namespace

BENCHMARK_MAIN();
