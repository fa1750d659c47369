#include <benchmark/benchmark.h>

#include <vector>

#include "congruence/chowforms.hpp"
#include "congruence/oracles.hpp"
#include "congruence/parse.hpp"
#include "congruence/random.hpp"
#include "congruence/solver.hpp"

using namespace congruence;

namespace {

const PrimeField kFp;
const RationalField kQ;

BinaryForm<PrimeField> random_form(int degree, Xoshiro256& rng) {
  std::vector<Fp> c;
  for (int i = 0; i <= degree; ++i) c.push_back(kFp.from_int(rng.uniform(1, 32002)));
  return BinaryForm<PrimeField>(kFp, c);
}

void BM_ResultantBinary(benchmark::State& state) {
  Xoshiro256 rng(1);
  const int d = static_cast<int>(state.range(0));
  auto f = random_form(d, rng), g = random_form(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_binary(f, g));
}
BENCHMARK(BM_ResultantBinary)->Arg(4)->Arg(12)->Arg(24);

void BM_Discriminant(benchmark::State& state) {
  Xoshiro256 rng(2);
  auto f = random_form(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant)->Arg(6)->Arg(12);

// Affine chart of a random quartic with its Hessian: the inflection system.
void BM_BuchbergerInflections(benchmark::State& state) {
  auto f = random_plane_curve(kFp, 4, 0x5EED);
  auto h = hessian3(f);
  auto ring = make_ring(kFp, {"x", "y"});
  using P = MultiPoly<PrimeField>;
  std::vector<P> chart{P::variable(ring, 0), P::variable(ring, 1), P::constant(ring, kFp.one())};
  std::vector<P> gens{f.substitute(chart), h.substitute(chart)};
  for (auto _ : state)
    benchmark::DoNotOptimize(buchberger<PrimeField>(std::span<const MultiPoly<PrimeField>>(gens), MonomialOrder::grevlex()));
}
BENCHMARK(BM_BuchbergerInflections)->Unit(benchmark::kMillisecond);

void BM_PlaneBitangentOracle(benchmark::State& state) {
  auto f = random_plane_curve(kFp, 4, 0x5EED);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_plane_bitangents(f, 0x5EED).count);
}
BENCHMARK(BM_PlaneBitangentOracle)->Unit(benchmark::kMillisecond);

void BM_ChowFormRational(benchmark::State& state) {
  auto c = state.range(0) == 3 ? twisted_cubic(kQ) : state.range(0) == 4 ? rational_quartic(kQ) : rational_quintic(kQ);
  for (auto _ : state) benchmark::DoNotOptimize(chow_form(c));
}
BENCHMARK(BM_ChowFormRational)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ChowFormPrime(benchmark::State& state) {
  auto c = state.range(0) == 3 ? twisted_cubic(kFp) : state.range(0) == 4 ? rational_quartic(kFp) : rational_quintic(kFp);
  for (auto _ : state) benchmark::DoNotOptimize(chow_form(c));
}
BENCHMARK(BM_ChowFormPrime)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
