#include <benchmark/benchmark.h>

#include <algorithm>
#include <span>

#include "dpqs/experiment.hpp"
#include "dpqs/sorters.hpp"
#include "dpqs/tuner.hpp"

using namespace dpqs;

namespace {

ExperimentSpec trial_spec(std::size_t n) {
  ExperimentSpec s;
  s.t = {1, 1, 1};
  s.w = 46;
  s.ns = {n};
  s.trials = 32;
  s.seed = 7;
  return s;
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto spec = trial_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(spec));
}

void BM_TrialsParallel(benchmark::State& state) {
  const auto spec = trial_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(spec));
}

void BM_TunerSerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_t_serial(k, CostMeasure::comparisons));
}

void BM_TunerParallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_t(k, CostMeasure::comparisons));
}

void BM_SortUninstrumented(benchmark::State& state) {
  const auto input = random_permutation(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    auto a = input;
    sort_yqs(std::span<std::int64_t>(a), SortConfig{{1, 1, 1}, 46});
    benchmark::DoNotOptimize(a.data());
  }
}

void BM_SortCounting(benchmark::State& state) {
  const auto input = random_permutation(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    auto a = input;
    CountingMeter m;
    sort_yqs(std::span<std::int64_t>(a), SortConfig{{1, 1, 1}, 46}, m);
    benchmark::DoNotOptimize(m.total(Measure::comparisons));
  }
}

void BM_StdSort(benchmark::State& state) {
  const auto input = random_permutation(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    auto a = input;
    std::sort(a.begin(), a.end());
    benchmark::DoNotOptimize(a.data());
  }
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TunerSerial)->Arg(32)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TunerParallel)->Arg(32)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SortUninstrumented)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SortCounting)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StdSort)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
