#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "dpqs/sorters.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace dpqs;

TEST_CASE("hand trace of one partitioning step") {
  std::vector<int> a{5, 1, 8, 4, 6, 2, 9};
  CountingMeter m;
  const PartitionResult r = partition_dual(std::span<int>(a), 0, 6, 3, 7, m);
  CHECK(a == std::vector<int>{1, 2, 5, 4, 6, 8, 9});
  CHECK(r.ip == 1);
  CHECK(r.iq == 5);
  CHECK(r.k_final == 5);
  CHECK(r.g_final == 4);
  const PartitionStats& s = *m.first_partition();
  CHECK(s.I1 == 2);
  CHECK(s.I2 == 3);
  CHECK(s.I3 == 2);
  CHECK(s.delta == 0);
  CHECK(s.K == 5);
  CHECK(s.G == 2);
  CHECK(s.L == 2);
  CHECK(s.l_at_K == 1);
  CHECK(s.s_at_G == 1);
  CHECK(s.s_at_Kprime == 1);
  CHECK(s.comparisons == 12);
  CHECK(s.swaps == 3);
  CHECK(s.scanned == 9);
  CHECK(s.bytecodes == 123);
  const auto br = m.branch_counts();
  CHECK(br.at("line4_swap") == 1);
  CHECK(br.at("line13_swap") == 1);
  CHECK(br.count("line12_swap") == 0);
}

TEST_CASE("crossing on a large element sets delta") {
  // k and g meet on 9, which is larger than Q; the line-12 swap is a self-swap
  std::vector<int> a{1, 9};
  CountingMeter m;
  const PartitionResult r = partition_dual(std::span<int>(a), 0, 1, 3, 7, m);
  CHECK(a == std::vector<int>{1, 9});
  CHECK(r.overshoot() == 2);
  const auto& s = *m.first_partition();
  CHECK(s.I1 == 1);
  CHECK(s.I2 == 0);
  CHECK(s.I3 == 1);
  CHECK(s.delta == 1);
  CHECK(s.comparisons == 5);
  CHECK(s.swaps == 2);
  CHECK(s.scanned == 4);
  CHECK(m.branch_counts().at("line12_swap") == 1);
}

TEST_CASE("partition agrees with the reference on every small permutation") {
  for (long n = 1; n <= 7; ++n) {
    std::vector<long> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0L);
    for (long p = 0; p <= n; ++p)
      for (long q = p; q <= n; ++q) {
        auto perm = base;
        do {
          std::vector<long> a(perm), ref(perm);
          for (auto& x : a) x *= 2;
          for (auto& x : ref) x *= 2;
          const auto tr = oracle::partition(ref, 0, n - 1, 2 * p - 1, 2 * q - 1);
          CountingMeter m;
          partition_dual(std::span<long>(a), 0, n - 1, 2 * p - 1, 2 * q - 1, m);
          const auto& s = *m.first_partition();
          REQUIRE(a == ref);
          REQUIRE(s.comparisons == tr.comparisons);
          REQUIRE(s.swaps == tr.swaps);
          REQUIRE(s.scanned == tr.scanned());
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
}

TEST_CASE("sorters handle tiny and degenerate inputs") {
  for (int n = 0; n <= 12; ++n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    do {
      auto y = a, c = a;
      sort_yqs(std::span<int>(y), SortConfig{{0, 0, 0}, 2});
      sort_cqs(std::span<int>(c), CqsSortConfig{{0, 0}, 1});
      REQUIRE(std::is_sorted(y.begin(), y.end()));
      REQUIRE(std::is_sorted(c.begin(), c.end()));
    } while (n <= 7 && std::next_permutation(a.begin(), a.end()));
  }
  std::vector<int> same(1000, 4);
  sort_yqs(std::span<int>(same), SortConfig{{1, 1, 1}, 4});
  CHECK(std::all_of(same.begin(), same.end(), [](int x) { return x == 4; }));
}

TEST_CASE("metered and unmetered runs produce the same output") {
  oracle::Gen gen(17);
  for (int c = 0; c < 200; ++c) {
    auto a = gen.permutation(gen.uniform(0, 3000));
    auto b = a;
    const auto t = gen.sampling(11);
    const SortConfig cfg{t, std::max(t.k() - 1, 1) + static_cast<int>(gen.uniform(0, 50))};
    CountingMeter m;
    sort_yqs(std::span<long>(a), cfg, m);
    sort_yqs(std::span<long>(b), cfg);
    REQUIRE(a == b);
    REQUIRE(std::is_sorted(a.begin(), a.end()));
  }
}

TEST_CASE("configuration errors are rejected before sorting") {
  std::vector<int> a{3, 1, 2};
  CHECK_THROWS_AS(sort_yqs(std::span<int>(a), SortConfig{{1, 1, 1}, 3}), ConfigError);
  CHECK_THROWS_AS(sort_yqs(std::span<int>(a), SortConfig{{-1, 0, 0}, 5}), ConfigError);
  CHECK_THROWS_AS(sort_yqs(std::span<int>(a), SortConfig{{0, 0, 0}, 0}), ConfigError);
  CHECK_THROWS_AS(sort_cqs(std::span<int>(a), CqsSortConfig{{2, 2}, 3}), ConfigError);
  CHECK(a == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(insertion_sort_directional(std::span<int>(a), 0, 2, 4, Direction::from_left), ConfigError);
  CHECK_THROWS_AS(insertion_sort_directional(std::span<int>(a), 0, 3, 1, Direction::from_left), ConfigError);
  CHECK_THROWS_AS(insertion_sort_directional(std::span<int>(a), 0, 2, 0, Direction::from_left), ConfigError);
  CHECK_THROWS_AS(partition_dual(std::span<int>(a), 0, 2, 5, 1), ConfigError);
  CHECK_THROWS_AS(sample_sort_directional(std::span<int>(a), 0, 2, 1, Direction::from_left, SamplingParam{1, 1, 1}),
                  ConfigError);
}

TEST_CASE("directional insertion sort from both ends") {
  std::vector<int> a{1, 4, 7, 3, 0, 9, 2};
  insertion_sort_directional(std::span<int>(a), 0, 6, 3, Direction::from_left);
  CHECK(std::is_sorted(a.begin(), a.end()));
  std::vector<int> b{8, 3, 5, 0, 1, 2, 6};
  insertion_sort_directional(std::span<int>(b), 0, 6, 2, Direction::from_right);
  CHECK(std::is_sorted(b.begin(), b.end()));
  std::vector<int> c{5, 4, 3, 2, 1};
  insertion_sort_directional(std::span<int>(c), 1, 3, 1, Direction::from_left);
  CHECK(c == std::vector<int>{5, 2, 3, 4, 1});
}

TEST_CASE("sample sort orders the sample across the gap and leaves the rest alone") {
  const SamplingParam t{1, 2, 1};  // left block 4 cells, right block 2 cells
  oracle::Gen gen(5);
  for (int c = 0; c < 500; ++c) {
    const long n = gen.uniform(t.k(), 40);
    auto a = gen.permutation(n);
    const bool left = gen.coin();
    const long smax = left ? t.t1 + t.t2 + 1 : t.t3 + 1;
    const long s = gen.uniform(1, smax);
    if (left)
      std::sort(a.begin(), a.begin() + s);
    else
      std::sort(a.end() - s, a.end());
    auto pre = a;
    sample_sort_directional(std::span<long>(a), 0, n - 1, s, left ? Direction::from_left : Direction::from_right, t);
    std::vector<long> sample(a.begin(), a.begin() + 4), orig(pre.begin(), pre.begin() + 4);
    sample.insert(sample.end(), a.end() - 2, a.end());
    orig.insert(orig.end(), pre.end() - 2, pre.end());
    std::sort(orig.begin(), orig.end());
    REQUIRE(sample == orig);
    REQUIRE(std::equal(a.begin() + 4, a.end() - 2, pre.begin() + 4));
  }
}

namespace {

struct Recorder {
  static constexpr bool active = false;
  std::vector<CallType> types;
  void on_call(CallType t, const int*, idx, idx) { types.push_back(t); }
};

}  // namespace

TEST_CASE("call types reach the hook in stack order") {
  Recorder rec;
  std::vector<int> a(200);
  std::iota(a.rbegin(), a.rend(), 0);
  sort_yqs(std::span<int>(a), SortConfig{{0, 0, 0}, 10}, rec);
  REQUIRE(rec.types.size() >= 4);
  CHECK(rec.types[0] == CallType::root);
  CHECK(rec.types[1] == CallType::left);
  CHECK(std::count(rec.types.begin(), rec.types.end(), CallType::middle) > 0);
  CHECK(std::count(rec.types.begin(), rec.types.end(), CallType::right) > 0);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("property: sorted permutation output") {
  const auto r = props::sorting(10000, 101);
  INFO(r.first);
  CHECK(r.ok());
}

TEST_CASE("property: sampled-out elements arrive sorted") {
  const auto r = props::handoff(10000, 102);
  INFO(r.first);
  CHECK(r.ok());
}

TEST_CASE("property: prefix skip matches textbook insertion sort") {
  const auto r = props::prefix_skip(10000, 103);
  INFO(r.first);
  CHECK(r.ok());
}
