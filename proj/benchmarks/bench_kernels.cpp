#include <benchmark/benchmark.h>

#include "dspec/charsums.hpp"
#include "dspec/counts.hpp"
#include "dspec/ddt.hpp"
#include "dspec/field.hpp"

namespace {

// Arg layout: {p, n}.
dspec::Field field_of(const benchmark::State& state) {
  return dspec::Field::build(static_cast<std::uint64_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
}

void BM_FieldBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(field_of(state));
}
BENCHMARK(BM_FieldBuild)->Args({59, 1})->Args({11, 3})->Args({19, 3})->Args({7, 6});

void BM_TableMul(benchmark::State& state) {
  const auto f = field_of(state);
  const auto& t = f.tables();
  dspec::Index acc = 1;
  const dspec::Index g = t.generator();
  for (auto _ : state) {
    acc = t.add(t.mul(acc, g), 1);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_TableMul)->Args({59, 1})->Args({19, 3});

void BM_PolynomialMul(benchmark::State& state) {
  const auto f = field_of(state);
  auto acc = f.one();
  const auto g = f.element(f.tables().generator());
  for (auto _ : state) {
    acc = f.mul(acc, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PolynomialMul)->Args({59, 1})->Args({19, 3});

void BM_DdtRow(benchmark::State& state) {
  const auto f = field_of(state);
  const std::uint64_t d = (f.q() + 3ull) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(dspec::ddt_row(f, d));
  state.SetItemsProcessed(state.iterations() * f.q());
}
BENCHMARK(BM_DdtRow)->Args({11, 3})->Args({19, 3})->Args({7, 6});

void BM_CharSum(benchmark::State& state) {
  const auto f = field_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(dspec::lambda_sums_enumerated(f));
  state.SetItemsProcessed(state.iterations() * f.q());
}
BENCHMARK(BM_CharSum)->Args({11, 3})->Args({19, 3});

void BM_QuadraticSystemBrute(benchmark::State& state) {
  const auto f = field_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(dspec::count_quadratic_system_brute(f));
}
BENCHMARK(BM_QuadraticSystemBrute)->Args({59, 1})->Args({11, 3})->Unit(benchmark::kMillisecond);

void BM_DSystemBrute(benchmark::State& state) {
  const auto f = field_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(dspec::count_d_system_brute(f, (f.q() + 3ull) / 2));
}
BENCHMARK(BM_DSystemBrute)->Args({59, 1})->Args({11, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
