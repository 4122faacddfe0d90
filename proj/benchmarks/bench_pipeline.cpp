#include <benchmark/benchmark.h>

#include "cocycle/braid_invariant.hpp"

using namespace cocycle;

namespace {

using DR = Dual<RatFunA>;

Cochain2<RatFunA> sample_cocycle() {
  auto A = [](int k) { return RatFunA(LaurentA::monomial(k)); };
  return bracket_cocycle(RatFunA::one(), A(1), A(-1), RatFunA(GaussRat(0, 1)));
}

TuraevData<DR> deformed() {
  auto pt = deform(make_bracket_pair<RatFunA>(), sample_cocycle());
  auto co = solve_deformed_coefficients(pt);
  return make_turaev(build_R(pt, co.a, co.b));
}

void BM_CohomologyBracket(benchmark::State& state) {
  auto p = make_bracket_pair<RatFunA>();
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(p));
}
BENCHMARK(BM_CohomologyBracket);

void BM_DeformedYbe(benchmark::State& state) {
  auto td = deformed();
  for (auto _ : state) benchmark::DoNotOptimize(verify_ybe(td.R.R).ok);
}
BENCHMARK(BM_DeformedYbe);

void BM_TlRelations(benchmark::State& state) {
  auto p = make_bracket_pair<LaurentA>();
  const int n = static_cast<int>(state.range(0));
  auto e = tl_generators(p, n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tl_relations(e, p.delta0()).ok);
}
BENCHMARK(BM_TlRelations)->DenseRange(3, 5);

BraidWord alternating(int n, int length) {
  BraidWord w{n, {}};
  for (int k = 0; k < length; ++k) w.letters.push_back({k % (n - 1) + 1, k % 2 == 0 ? 1 : -1});
  return w;
}

void BM_InvariantUndeformed(benchmark::State& state) {
  auto td = make_turaev(build_R(make_bracket_pair<LaurentA>(), LaurentA::monomial(1), LaurentA::monomial(-1)));
  auto w = alternating(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(td, w));
}
BENCHMARK(BM_InvariantUndeformed)->DenseRange(2, 5);

void BM_InvariantDeformedLifted(benchmark::State& state) {
  auto td = deformed();
  auto w = alternating(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(closure_trace(td, w));
}
BENCHMARK(BM_InvariantDeformedLifted)->DenseRange(2, 4);

void BM_InvariantDeformedGeneric(benchmark::State& state) {
  auto td = deformed();
  auto w = alternating(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(closure_trace_generic(td, w));
}
BENCHMARK(BM_InvariantDeformedGeneric)->DenseRange(2, 4);

void BM_BracketOracle(benchmark::State& state) {
  auto w = alternating(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(jones_oracle(w));
}
BENCHMARK(BM_BracketOracle)->DenseRange(2, 6, 2);

}  // namespace
