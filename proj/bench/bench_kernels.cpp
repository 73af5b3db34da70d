#include <benchmark/benchmark.h>

#include <random>

#include "symwidth/cone.hpp"
#include "symwidth/exceptional.hpp"

using namespace symwidth;

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const long bound = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exceptional_serial(k, bound));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const long bound = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exceptional(k, bound));
}

// A class in the cone, so the scan visits every class.
PeriodVector member(std::size_t k) {
  std::vector<Rational> a{Rational(static_cast<long>(3 * k + 10))};
  std::mt19937_64 g(k);
  for (std::size_t i = 0; i < k; ++i) a.emplace_back(static_cast<long>(20 + g() % 10), 10);
  for (auto& x : a) x.canonicalize();
  return PeriodVector(std::move(a));
}

void BM_ViolatorSerial(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto classes = enumerate_exceptional(k, state.range(1)).classes;
  const PeriodVector w = member(k);
  for (auto _ : state) benchmark::DoNotOptimize(first_violator_serial(w, classes));
  state.counters["classes"] = static_cast<double>(classes.size());
}

void BM_ViolatorParallel(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto classes = enumerate_exceptional(k, state.range(1)).classes;
  const PeriodVector w = member(k);
  for (auto _ : state) benchmark::DoNotOptimize(first_violator(w, classes));
  state.counters["classes"] = static_cast<double>(classes.size());
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Args({8, 6})->Args({9, 8})->Args({10, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({8, 6})->Args({9, 8})->Args({10, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ViolatorSerial)->Args({8, 6})->Args({10, 8})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ViolatorParallel)->Args({8, 6})->Args({10, 8})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
