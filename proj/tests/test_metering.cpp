#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "dpqs/experiment.hpp"
#include "dpqs/meter.hpp"
#include "dpqs/sorters.hpp"
#include "properties.hpp"

using namespace dpqs;

namespace {

PartitionStats traced() {
  // stats of the [5,1,8,4,6,2,9], P=3, Q=7 step
  PartitionStats s;
  s.n_prime = 7;
  s.I1 = 2;
  s.I2 = 3;
  s.I3 = 2;
  s.K = 5;
  s.G = 2;
  s.L = 2;
  s.l_at_K = 1;
  s.s_at_G = 1;
  s.s_at_Kprime = 1;
  s.comparisons = 12;
  s.swaps = 3;
  s.scanned = 9;
  return s;
}

}  // namespace

TEST_CASE("identity checker accepts a consistent step and rejects broken ones") {
  CHECK_NOTHROW(check_partition_identities(traced()));
  auto s = traced();
  s.comparisons = 11;
  CHECK_THROWS_AS(check_partition_identities(s), InstrumentationError);
  s = traced();
  s.G = 3;
  CHECK_THROWS_AS(check_partition_identities(s), InstrumentationError);
  s = traced();
  s.swaps = 4;
  CHECK_THROWS_AS(check_partition_identities(s), InstrumentationError);
  s = traced();
  s.delta = 2;
  CHECK_THROWS_AS(check_partition_identities(s), InstrumentationError);
  s = traced();
  s.I3 = 3;
  CHECK_THROWS_AS(check_partition_identities(s), InstrumentationError);
}

TEST_CASE("bytecode estimate uses the configured weights") {
  const auto s = traced();
  CHECK(bytecode_estimate(s) == 70 + 26 + 15 + 11 + 1);
  BytecodeWeights w{1, 0, 0, 0, 0, 5};
  CHECK(bytecode_estimate(s, w) == 12);
}

TEST_CASE("meter sequencing errors") {
  CountingMeter m;
  CHECK_THROWS_AS(m.end_partition(0, 0, 0, 1), InstrumentationError);
  m.begin_partition(2, 2);
  CHECK_THROWS_AS(m.begin_partition(2, 2), InstrumentationError);
  CHECK_THROWS_AS(m.end_partition(0, 0, 0, 3), InstrumentationError);
}

TEST_CASE("names round-trip") {
  for (Phase p : kAllPhases) CHECK(parse_phase(to_string(p)) == p);
  for (Measure m : kAllMeasures) CHECK(parse_measure(to_string(m)) == m);
  CHECK_THROWS_AS(parse_measure("cycles"), ConfigError);
  CountingMeter m;
  m.branch("custom");
  m.branch("custom");
  m.branch(Branch::line4_swap);
  m.branch("line4_swap");
  const auto b = m.branch_counts();
  CHECK(b.at("custom") == 2);
  CHECK(b.at("line4_swap") == 2);
}

TEST_CASE("short inputs are charged to insertion sort only") {
  std::vector<int> a{4, 2, 7, 1, 0, 3};
  CountingMeter m;
  sort_yqs(std::span<int>(a), SortConfig{{0, 0, 0}, 46}, m);
  CHECK(m.partitions() == 0);
  CHECK(m.count(Phase::partition, Measure::comparisons) == 0);
  CHECK(m.count(Phase::sample_sort, Measure::comparisons) == 0);
  std::vector<int> b{4, 2, 7, 1, 0, 3};
  const auto ref = oracle::insertion_sort(b, 0, 5);
  CHECK(m.count(Phase::insertion_sort, Measure::comparisons) == ref.comparisons);
  CHECK(m.count(Phase::insertion_sort, Measure::writes) == ref.writes);
  CHECK(m.count(Phase::insertion_sort, Measure::scanned) == ref.reads);
}

TEST_CASE("cache misses are split over phases and sum to the simulator count") {
  MeterOptions o;
  o.cache = CacheConfig{46, 1};
  CountingMeter m(o);
  auto a = random_permutation(20000, 3);
  sort_yqs(std::span<std::int64_t>(a), SortConfig{{1, 1, 1}, 46}, m);
  CHECK(m.total(Measure::cache_misses) == m.cache()->misses());
  CHECK(m.count(Phase::partition, Measure::cache_misses) > 0);
  CHECK(m.count(Phase::sample_sort, Measure::cache_misses) > 0);
}

TEST_CASE("cost report statistics match a direct computation") {
  std::vector<std::uint64_t> xs{10, 12, 9, 15, 11};
  CostReport r;
  for (auto x : xs) {
    CountTable t{};
    t[0][0] = x;
    t[1][0] = 2 * x;
    r.add_trial(t);
  }
  double mean = 0, var = 0;
  for (auto x : xs) mean += static_cast<double>(x);
  mean /= 5;
  for (auto x : xs) var += (static_cast<double>(x) - mean) * (static_cast<double>(x) - mean);
  var /= 4;
  CHECK(r.trials() == 5);
  CHECK(r.sum(Phase::partition, Measure::comparisons) == 57);
  CHECK(r.mean(Phase::partition, Measure::comparisons) == doctest::Approx(mean));
  CHECK(r.stderr_of(Phase::partition, Measure::comparisons) == doctest::Approx(std::sqrt(var / 5)));
  CHECK(r.total_mean(Measure::comparisons) == doctest::Approx(3 * mean));
  CHECK(r.total_stderr(Measure::comparisons) == doctest::Approx(3 * std::sqrt(var / 5)));
  CHECK(r.stderr_of(Phase::partition, Measure::swaps) == 0.0);
}

TEST_CASE("merging reports equals adding trials in sequence") {
  ExperimentSpec spec;
  spec.t = {1, 1, 1};
  CostReport all, a, b;
  for (int i = 0; i < 6; ++i) {
    const auto c = run_trial(spec, 500, i);
    all.add_trial(c);
    (i < 2 ? a : b).add_trial(c);
  }
  CHECK(merge_reports({a, b}) == all);
  CHECK_FALSE(merge_reports({a}) == all);
  CHECK_THROWS_AS(merge_reports({}), ConfigError);
}

TEST_CASE("property: partition counters agree with the reference trace") {
  const auto r = props::partition(10000, 201);
  INFO(r.first);
  CHECK(r.ok());
}

TEST_CASE("property: per-step identities over whole sorts") {
  const auto r = props::identities(10000, 202);
  INFO(r.first);
  CHECK(r.ok());
}
