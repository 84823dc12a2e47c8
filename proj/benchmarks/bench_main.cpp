#include <random>

#include <benchmark/benchmark.h>

#include "mcsa/algebra.hpp"
#include "mcsa/bounds.hpp"
#include "mcsa/bricks.hpp"
#include "mcsa/linalg.hpp"

namespace {

void BM_CentralizerCourter(benchmark::State& state) {
  const auto a = mcsa::build_courter(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mcsa::centralizer(a).dimension());
}
BENCHMARK(BM_CentralizerCourter)->DenseRange(14, 28, 7)->Unit(benchmark::kMillisecond);

void BM_LoewySignatureCourter(benchmark::State& state) {
  const auto a = mcsa::build_courter(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mcsa::loewy_signature(a));
}
BENCHMARK(BM_LoewySignatureCourter)->Arg(14)->Arg(28)->Unit(benchmark::kMillisecond);

void BM_DR(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mcsa::d_r(state.range(0), r).value);
}
BENCHMARK(BM_DR)->Args({28, 3})->Args({60, 4})->Args({36, 6})->Args({100, 6});

void BM_FirstExceptional(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mcsa::first_exceptional(r).n);
}
BENCHMARK(BM_FirstExceptional)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_RankDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-9, 9);
  mcsa::RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(mcsa::rank(m));
}
BENCHMARK(BM_RankDense)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
