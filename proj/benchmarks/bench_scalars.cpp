#include <benchmark/benchmark.h>

#include "cocycle/scalar.hpp"

using namespace cocycle;

namespace {

LaurentA A(int k) { return LaurentA::monomial(k); }

void BM_LaurentMul(benchmark::State& state) {
  LaurentA x, y;
  for (int k = 0; k < state.range(0); ++k) {
    x += A(k - 5).scaled(GaussRat(k + 1, 1));
    y += A(3 - k).scaled(GaussRat(2, -k));
  }
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(16)->Arg(64);

void BM_RatFunAdd(benchmark::State& state) {
  RatFunA x(A(2) + A(-1), A(1) + LaurentA::one());
  RatFunA y(A(3) - A(-2), A(2) + A(-2));
  for (auto _ : state) benchmark::DoNotOptimize(x + y);
}
BENCHMARK(BM_RatFunAdd);

void BM_RatFunMulCancel(benchmark::State& state) {
  RatFunA x(A(2) - LaurentA::one(), A(2) + LaurentA::one());
  RatFunA y(A(2) + LaurentA::one(), A(1) + LaurentA::one());
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RatFunMulCancel);

void BM_DualRatFunInverse(benchmark::State& state) {
  Dual<RatFunA> x(RatFunA(-A(2) - A(-2)), RatFunA(A(3) - A(-1)));
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_DualRatFunInverse);

void BM_ParseScalar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_scalar<RatFunA>("(i*A^3 - 2/3*A^-1)/(A^2 + 1)"));
}
BENCHMARK(BM_ParseScalar);

}  // namespace
