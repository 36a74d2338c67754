#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpqs/cachesim.hpp"

namespace dpqs {

enum class Phase : std::uint8_t { partition, insertion_sort, sample_sort };
inline constexpr std::size_t kPhases = 3;

enum class Measure : std::uint8_t { comparisons, swaps, writes, scanned, bytecodes, cache_misses };
inline constexpr std::size_t kMeasures = 6;

enum class ScanRole : std::uint8_t { k, g, l, cqs, insertion };

enum class Branch : std::uint8_t { line4_swap, line12_swap, line13_swap };
inline constexpr std::size_t kBranches = 3;

enum class ElemClass : std::uint8_t { small, medium, large };

const char* to_string(Phase p);
const char* to_string(Measure m);
const char* to_string(Branch b);
Phase parse_phase(std::string_view s);
Measure parse_measure(std::string_view s);

inline constexpr std::array<Phase, kPhases> kAllPhases{Phase::partition, Phase::insertion_sort,
                                                       Phase::sample_sort};
inline constexpr std::array<Measure, kMeasures> kAllMeasures{
    Measure::comparisons, Measure::swaps,     Measure::writes,
    Measure::scanned,     Measure::bytecodes, Measure::cache_misses};

class InstrumentationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PartitionStats {
  std::uint64_t n_prime = 0;  // subrange length including the sample
  std::uint64_t k = 0;
  std::uint64_t I1 = 0, I2 = 0, I3 = 0;
  std::uint64_t delta = 0;
  std::uint64_t l_at_K = 0, s_at_G = 0, s_at_Kprime = 0;
  std::uint64_t K = 0, G = 0, L = 0;
  std::uint64_t comparisons = 0, swaps = 0, scanned = 0;
  std::uint64_t bytecodes = 0;

  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

struct BytecodeWeights {
  std::uint64_t w_n = 10;
  std::uint64_t w_I1 = 13;
  std::uint64_t w_I2 = 5;
  std::uint64_t w_X = 11;
  std::uint64_t w_Y = 1;
  std::uint64_t w_const = 0;
};

// w_n n' + w_I1 I1 + w_I2 I2 + w_X (l@K - delta) + w_Y s@K' + w_const
std::uint64_t bytecode_estimate(const PartitionStats& s, const BytecodeWeights& w = {});

// Throws InstrumentationError if the event counts in s are inconsistent.
void check_partition_identities(const PartitionStats& s);

struct MeterOptions {
  std::optional<CacheConfig> cache;
  BytecodeWeights weights{};
  bool keep_partition_log = false;
  bool check_identities = true;
};

// Sorters only touch a meter inside `if constexpr (M::active)`.
struct NullMeter {
  static constexpr bool active = false;
};

class CountingMeter {
 public:
  static constexpr bool active = true;

  explicit CountingMeter(MeterOptions options = {});

  void set_phase(Phase p) { phase_ = p; }
  Phase phase() const { return phase_; }

  void compare() { ++cur()[idx(Measure::comparisons)]; ++part_.comparisons; }
  void swap(std::size_t i, std::size_t j) {
    ++cur()[idx(Measure::swaps)];
    ++part_.swaps;
    touch(i);
    touch(j);
  }
  void write(std::size_t i) {
    ++cur()[idx(Measure::writes)];
    touch(i);
  }
  void read(std::size_t i) { touch(i); }
  void scan(ScanRole role, std::size_t i) { scan(role, i, ElemClass::medium); }
  void scan(ScanRole role, std::size_t i, ElemClass c);
  void branch(Branch b) { ++branches_[static_cast<std::size_t>(b)]; }
  void branch(std::string_view label);

  void begin_partition(std::uint64_t n_prime, std::uint64_t k);
  // overshoot = k_final - g_final; CQS partitions pass I2 = 0 and overshoot = 1.
  PartitionStats end_partition(std::uint64_t I1, std::uint64_t I2, std::uint64_t I3,
                               std::uint64_t overshoot);
  PartitionStats end_cqs_partition(std::uint64_t I1, std::uint64_t I3);

  std::uint64_t count(Phase p, Measure m) const { return counts_[pidx(p)][idx(m)]; }
  std::uint64_t total(Measure m) const;
  std::map<std::string, std::uint64_t> branch_counts() const;

  std::uint64_t partitions() const { return partitions_; }
  const std::optional<PartitionStats>& first_partition() const { return first_; }
  const std::vector<PartitionStats>& partition_log() const { return log_; }
  const std::optional<LruCache>& cache() const { return cache_; }
  const MeterOptions& options() const { return options_; }

 private:
  static constexpr std::size_t idx(Measure m) { return static_cast<std::size_t>(m); }
  static constexpr std::size_t pidx(Phase p) { return static_cast<std::size_t>(p); }
  std::array<std::uint64_t, kMeasures>& cur() { return counts_[pidx(phase_)]; }
  void touch(std::size_t i) {
    if (cache_ && !cache_->access(i)) ++cur()[idx(Measure::cache_misses)];
  }
  void record(PartitionStats& s);

  MeterOptions options_;
  Phase phase_ = Phase::sample_sort;
  std::array<std::array<std::uint64_t, kMeasures>, kPhases> counts_{};
  std::array<std::uint64_t, kBranches> branches_{};
  std::map<std::string, std::uint64_t> other_branches_;
  std::optional<LruCache> cache_;

  bool in_partition_ = false;
  bool last_k_large_ = false;
  std::uint64_t line1213_at_begin_ = 0;
  PartitionStats part_{};
  std::uint64_t partitions_ = 0;
  std::optional<PartitionStats> first_;
  std::vector<PartitionStats> log_;
};

// Exact per-(phase, measure) sums over trials; means and errors derive from them.
class CostReport {
 public:
  struct Cell {
    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
  };

  CostReport() = default;
  static CostReport from_meter(const CountingMeter& m);

  void add_trial(const CountingMeter& m);
  void add_trial(const std::array<std::array<std::uint64_t, kMeasures>, kPhases>& counts);

  std::uint64_t trials() const { return trials_; }
  std::uint64_t sum(Phase p, Measure m) const { return cells_[pi(p)][mi(m)].sum; }
  std::uint64_t total_sum(Measure m) const;
  double mean(Phase p, Measure m) const;
  double total_mean(Measure m) const;
  double stderr_of(Phase p, Measure m) const;
  double total_stderr(Measure m) const;

  friend CostReport merge_reports(const std::vector<CostReport>& reports);
  friend bool operator==(const CostReport& a, const CostReport& b);

 private:
  static constexpr std::size_t pi(Phase p) { return static_cast<std::size_t>(p); }
  static constexpr std::size_t mi(Measure m) { return static_cast<std::size_t>(m); }

  std::uint64_t trials_ = 0;
  std::array<std::array<Cell, kMeasures>, kPhases> cells_{};
  std::array<Cell, kMeasures> totals_{};
};

CostReport merge_reports(const std::vector<CostReport>& reports);

}  // namespace dpqs
