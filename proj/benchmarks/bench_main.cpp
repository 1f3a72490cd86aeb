#include <benchmark/benchmark.h>

#include "stanley/bound.hpp"
#include "stanley/corpus.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/text.hpp"

namespace {

using namespace stanley;

MonomialIdeal cycle(int n) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    Monomial m(n);
    m[i] = 1;
    m[(i + 1) % n] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(RingCtx(n), gens);
}

MonomialIdeal maximal(int n) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(RingCtx(n), gens);
}

void BM_SdepthQuotientCycle(benchmark::State& state) {
  const auto i = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdepth_quotient(i).value);
}
BENCHMARK(BM_SdepthQuotientCycle)->DenseRange(3, 6);

void BM_SdepthMaximalIdeal(benchmark::State& state) {
  const auto i = maximal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdepth_ideal(i).value);
}
BENCHMARK(BM_SdepthMaximalIdeal)->DenseRange(2, 6);

void BM_Decompose(benchmark::State& state) {
  CorpusSpec spec;
  spec.family = Family::General;
  spec.count = 50;
  spec.n_min = spec.n_max = static_cast<int>(state.range(0));
  spec.gens_min = spec.gens_max = static_cast<int>(state.range(0));
  const auto ideals = generate_corpus(spec);
  for (auto _ : state) {
    for (const auto& i : ideals) benchmark::DoNotOptimize(decompose(i).size());
  }
}
BENCHMARK(BM_Decompose)->DenseRange(3, 7, 2);

void BM_MainBound(benchmark::State& state) {
  const auto d = decompose(parse_ideal("x1^2*x2, x2^3*x3, x1*x3^2, x4^2*x1"));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_main_bound(d).value);
}
BENCHMARK(BM_MainBound);

void BM_VerifyDirectSum(benchmark::State& state) {
  const auto d = decompose(parse_ideal("x1^2, x2*x3"));
  const auto ctx = build_split(d, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_direct_sum(ctx, static_cast<int>(state.range(0))).monomials);
}
BENCHMARK(BM_VerifyDirectSum)->Arg(6)->Arg(10);

}  // namespace
BENCHMARK_MAIN();
