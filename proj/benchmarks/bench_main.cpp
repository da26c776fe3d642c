#include <benchmark/benchmark.h>

#include <random>

#include "mcm/dickson.hpp"
#include "mcm/identities.hpp"
#include "mcm/pgl2.hpp"
#include "mcm/poly.hpp"
#include "mcm/splitting.hpp"

using namespace mcm;

static void BM_FieldMul(benchmark::State& state) {
  const auto& F = FieldContext::make(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> xs(1024);
  for (auto& x : xs) x = rng() & F.mask();
  std::uint64_t acc = 1;
  std::size_t i = 0;
  for (auto _ : state) {
    acc = F.mul(acc | 1, xs[i++ & 1023]);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Arg(48)->Arg(64);

static void BM_FieldInv(benchmark::State& state) {
  const auto& F = FieldContext::make(static_cast<unsigned>(state.range(0)));
  std::uint64_t x = 3;
  for (auto _ : state) {
    x = F.inv(x) | 1;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldInv)->Arg(16)->Arg(64);

// C(x) + a over GF(2^k): degree (q/2)(q-1).
static void BM_FactorCPlusA(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const auto& F = FieldContext::make(k);
  const UPoly f = c_poly(n, F) + UPoly::constant(F.generator());
  for (auto _ : state) benchmark::DoNotOptimize(factor(f, 0));
}
BENCHMARK(BM_FactorCPlusA)->Args({3, 3})->Args({4, 4})->Args({5, 5})->Unit(benchmark::kMillisecond);

static void BM_MainIdentity(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(main_identity_sides(n));
}
BENCHMARK(BM_MainIdentity)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_BuildFrame(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto a = FieldContext::make(1).one();
  for (auto _ : state) benchmark::DoNotOptimize(build_frame(n, a, 0));
}
BENCHMARK(BM_BuildFrame)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ClassCounts(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_counts(n));
}
BENCHMARK(BM_ClassCounts)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
