#include <benchmark/benchmark.h>

#include <random>

#include "sfrey/class_group.hpp"
#include "sfrey/cubic.hpp"
#include "sfrey/errors.hpp"
#include "sfrey/frey.hpp"
#include "sfrey/pipeline.hpp"

namespace {

using namespace sfrey;

BinaryCubic cubic(long a0, long a1, long a2, long a3) { return BinaryCubic{{AlgInt(a0), AlgInt(a1), AlgInt(a2), AlgInt(a3)}}; }

BinaryCubic random_cubic(const QuadField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-50, 50);
  BinaryCubic f;
  for (AlgInt& c : f.a) c = k.elem(coord(rng), k.is_rationals() ? 0 : coord(rng));
  return f;
}

void BM_SyzygyResidual(benchmark::State& state) {
  const QuadField k = state.range(0) == 0 ? QuadField::rationals() : QuadField::make(-5);
  std::mt19937_64 rng(1);
  std::vector<BinaryCubic> forms;
  for (int i = 0; i < 64; ++i) forms.push_back(random_cubic(k, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(syzygy_residual(forms[i++ % forms.size()]));
  }
}
BENCHMARK(BM_SyzygyResidual)->Arg(0)->Arg(1);

void BM_ResultantHF(benchmark::State& state) {
  const QuadField k = QuadField::make(-5);
  std::mt19937_64 rng(2);
  const BinaryCubic f = random_cubic(k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_HF(f));
}
BENCHMARK(BM_ResultantHF);

void BM_FreyInvariants(benchmark::State& state) {
  const QuadField k = QuadField::make(-5);
  const BinaryCubic f = cubic(1, 0, 1, 1);
  const AlgInt x = k.elem(17, -4);
  const AlgInt y = k.elem(-9, 11);
  for (auto _ : state) benchmark::DoNotOptimize(frey_invariants(k, f, x, y));
}
BENCHMARK(BM_FreyInvariants);

void BM_PointCount(benchmark::State& state) {
  const QuadField q = QuadField::rationals();
  const std::uint64_t bound = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t p = bound;
  while (!is_prime(Int(std::to_string(p)))) ++p;
  const PrimeIdeal prime = factor_rational_prime(q, Int(std::to_string(p))).front().first;
  const WeierstrassCurve e{AlgInt(1), AlgInt(-3), AlgInt(5)};
  for (auto _ : state) benchmark::DoNotOptimize(point_count(q, e, prime));
  state.SetComplexityN(static_cast<long>(p));
}
BENCHMARK(BM_PointCount)->RangeMultiplier(10)->Range(100, 100000)->Complexity(benchmark::oN);

void BM_ClassGroup(benchmark::State& state) {
  const QuadField k = QuadField::make(-state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_group(k));
}
BENCHMARK(BM_ClassGroup)->Arg(5)->Arg(23)->Arg(479)->Arg(9239);

void BM_TMSearch(benchmark::State& state) {
  const QuadField q = QuadField::rationals();
  const BinaryCubic f = cubic(-3, -5, -2, -3);
  const ExceptionalSet s = build_SF(q, f);
  TMSearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tm_search(q, f, s, state.range(0), opts));
}
BENCHMARK(BM_TMSearch)->Args({25, 1})->Args({50, 1})->Args({50, 4})->Unit(benchmark::kMillisecond);

void BM_DistinguishingPrime(benchmark::State& state) {
  const QuadField q = QuadField::rationals();
  const WeierstrassCurve e{AlgInt(0), AlgInt(0), AlgInt(-2)};
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(distinguishing_prime(q, e, e, 2, {}, static_cast<std::uint64_t>(state.range(0))));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_DistinguishingPrime)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
