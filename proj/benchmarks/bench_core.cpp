#include <benchmark/benchmark.h>

#include "fermat/factorization.hpp"
#include "fermat/frey.hpp"
#include "fermat/ideal.hpp"
#include "fermat/ring.hpp"

using namespace fermat;

namespace {

RingElement sample(const Ring& ring, long seed) {
  std::vector<Integer> c;
  for (unsigned i = 0; i < ring->degree(); ++i) c.emplace_back((seed * 37 + i * 11) % 29 - 14);
  return RingElement(ring, std::move(c));
}

void BM_RingMultiply(benchmark::State& state) {
  const auto ring = RingContext::build(static_cast<unsigned>(state.range(0)));
  const RingElement a = sample(ring, 3), b = sample(ring, 8);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMultiply)->Arg(7)->Arg(13)->Arg(19);

void BM_Norm(benchmark::State& state) {
  const auto ring = RingContext::build(static_cast<unsigned>(state.range(0)));
  const RingElement a = sample(ring, 5);
  for (auto _ : state) benchmark::DoNotOptimize(norm(a));
}
BENCHMARK(BM_Norm)->Arg(7)->Arg(13)->Arg(19);

void BM_IdealProduct(benchmark::State& state) {
  const auto ring = RingContext::build(static_cast<unsigned>(state.range(0)));
  const Ideal a = principal_ideal(sample(ring, 2)), b = principal_ideal(sample(ring, 9));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_product(a, b));
}
BENCHMARK(BM_IdealProduct)->Arg(7)->Arg(13);

void BM_FactorElement(benchmark::State& state) {
  const auto ring = RingContext::build(7);
  const RingElement a = sample(ring, 4);
  for (auto _ : state) benchmark::DoNotOptimize(factor_element(a));
}
BENCHMARK(BM_FactorElement);

void BM_BuildFactors(benchmark::State& state) {
  const auto ring = RingContext::build(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_factors(ring, Integer(2402), Integer(-1)));
}
BENCHMARK(BM_BuildFactors)->Arg(7)->Arg(11)->Arg(13);

void BM_Type2Fixture(benchmark::State& state) {
  const auto ring = RingContext::build(7);
  const auto profile = build_factors(ring, Integer(2402), Integer(-1));
  for (auto _ : state) {
    const auto curve = frey_type2(profile, 5, Integer(7));
    benchmark::DoNotOptimize(j_beta_valuation(curve, 5, 1));
  }
}
BENCHMARK(BM_Type2Fixture);

}  // namespace

BENCHMARK_MAIN();
