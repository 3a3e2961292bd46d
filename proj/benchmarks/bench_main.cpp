#include <benchmark/benchmark.h>

#include "invstep/euler.hpp"
#include "invstep/invariance.hpp"
#include "invstep/poly.hpp"
#include "invstep/rational_fn.hpp"
#include "invstep/taylor.hpp"

namespace {

using namespace invstep;

Polyhedron unit_box(std::size_t n) {
  Matrix g(2 * n, n);
  Vector b(2 * n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1;
    g(n + i, i) = -1;
  }
  return {g, b};
}

Matrix contraction(std::size_t n) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = -1;
  return a;
}

void BM_SturmCount(benchmark::State& state) {
  // (t-1)(t-2)...(t-6) expanded.
  Polynomial f = Polynomial::constant(1);
  for (int r = 1; r <= 6; ++r)
    f = f * Polynomial({Rational(-r), Rational(1)});
  for (auto _ : state)
    benchmark::DoNotOptimize(count_zeros(f, 0, 10));
}
BENCHMARK(BM_SturmCount);

void BM_FirstSignCrossing(benchmark::State& state) {
  Polynomial f({Rational(1), Rational(-4, 3), Rational(1, 3)});
  Rational eps = pow_rational(Rational(1, 2), 40);
  for (auto _ : state)
    benchmark::DoNotOptimize(first_sign_crossing(f, eps));
}
BENCHMARK(BM_FirstSignCrossing);

void BM_MinGamma(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Polyhedron p = unit_box(n);
  LinearSystem sys{contraction(n)};
  for (auto _ : state)
    benchmark::DoNotOptimize(min_gamma(sys, p));
}
BENCHMARK(BM_MinGamma)->Arg(2)->Arg(4);

void BM_TaylorThreshold(benchmark::State& state) {
  Polyhedron p = unit_box(2);
  LinearSystem sys{contraction(2)};
  PolynomialScheme scheme = PolynomialScheme::taylor(
      static_cast<unsigned>(state.range(0)));
  Rational eps = pow_rational(Rational(1, 2), 40);
  for (auto _ : state)
    benchmark::DoNotOptimize(taylor_threshold(sys, p, scheme, eps));
}
BENCHMARK(BM_TaylorThreshold)->Arg(2)->Arg(4);

void BM_EulerThreshold(benchmark::State& state) {
  Polytope square{{Vector{Rational(1), Rational(1)},
                   Vector{Rational(1), Rational(-1)},
                   Vector{Rational(-1), Rational(1)},
                   Vector{Rational(-1), Rational(-1)}}};
  LinearSystem sys{contraction(2)};
  for (auto _ : state)
    benchmark::DoNotOptimize(euler_threshold(sys, square));
}
BENCHMARK(BM_EulerThreshold);

}  // namespace

BENCHMARK_MAIN();
