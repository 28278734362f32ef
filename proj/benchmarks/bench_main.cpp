#include <benchmark/benchmark.h>

#include "frs/extension.hpp"
#include "frs/mutate.hpp"
#include "frs/quotient.hpp"

using namespace frs;

namespace {

void BM_ValidateFuzzyOrder(benchmark::State& state) {
  Rng rng(1);
  const FuzzyOrderMatrix m = random_valid_foset(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_fuzzy_order(m));
  }
}
BENCHMARK(BM_ValidateFuzzyOrder)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_LatticeOps(benchmark::State& state) {
  Rng rng(2);
  const GradedSpace sp = GradedSpace::with_default_grade(static_cast<int>(state.range(0)));
  const Vec x = random_vec(rng, sp.dim);
  const Vec y = random_vec(rng, sp.dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice_ops(sp, x, y));
  }
}
BENCHMARK(BM_LatticeOps)->Arg(8)->Arg(64);

void BM_StabilizationIndex(benchmark::State& state) {
  Rng rng(3);
  const GradedSpace sp = GradedSpace::with_default_grade(6);
  const Vec x = random_nonneg_vec(rng, 6);
  const Vec y = random_nonneg_vec(rng, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilization_index(sp, x, y));
  }
}
BENCHMARK(BM_StabilizationIndex);

void BM_QuotientGradeOracles(benchmark::State& state) {
  Rng rng(4);
  const GradedSpace sp = GradedSpace::with_default_grade(6);
  const QuotientSpace q(sp, CoordinateIdeal(sp, {1, 4}));
  const QClass f = project(q, random_vec(rng, 6));
  const QClass g = project(q, random_vec(rng, 6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_grade(q, f, g));
    benchmark::DoNotOptimize(quotient_grade_by_correction(q, f, g, rng));
  }
}
BENCHMARK(BM_QuotientGradeOracles);

void BM_ThetaExtension(benchmark::State& state) {
  const GradedSpace sp = GradedSpace::with_default_grade(4);
  const SublatticeSubspace m = SublatticeSubspace::verified(
      sp, {Vec{Rational(1), Rational(1), Rational(0), Rational(0)},
           Vec{Rational(0), Rational(0), Rational(1), Rational(1)}});
  RationalOperator t(sp, GradedSpace::with_default_grade(2));
  t.at(0, 0) = 2;
  t.at(1, 2) = 3;
  const Vec x{Rational(1), Rational(3), Rational(-2), Rational(5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_extension(m, t, x));
  }
}
BENCHMARK(BM_ThetaExtension);

void BM_Factorize(benchmark::State& state) {
  Rng rng(5);
  const RationalOperator q = random_hom(rng, 4, 4);
  RationalOperator s = random_operator(rng, 3, 4, 6, 4);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) s.at(r, c) = abs(s.at(r, c));
  }
  const RationalOperator sq = s.compose(q);
  RationalOperator t(q.domain, s.codomain);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) t.at(r, c) = sq.at(r, c) / 2;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(q, s, t));
  }
}
BENCHMARK(BM_Factorize);

}  // namespace

BENCHMARK_MAIN();
