#include "dpqs/meter.hpp"

#include <cmath>

#include "dpqs/sampling.hpp"

namespace dpqs {

namespace {

constexpr std::array<const char*, kPhases> kPhaseNames{"partition", "insertion_sort", "sample_sort"};
constexpr std::array<const char*, kMeasures> kMeasureNames{"comparisons", "swaps",     "writes",
                                                           "scanned",     "bytecodes", "cache_misses"};
constexpr std::array<const char*, kBranches> kBranchNames{"line4_swap", "line12_swap", "line13_swap"};

std::string fail_message(const PartitionStats& s, const char* what) {
  return std::string("partition identity violated: ") + what + " (n'=" + std::to_string(s.n_prime) +
         ", I=" + std::to_string(s.I1) + "," + std::to_string(s.I2) + "," + std::to_string(s.I3) +
         ", delta=" + std::to_string(s.delta) + ")";
}

}  // namespace

const char* to_string(Phase p) { return kPhaseNames[static_cast<std::size_t>(p)]; }
const char* to_string(Measure m) { return kMeasureNames[static_cast<std::size_t>(m)]; }
const char* to_string(Branch b) { return kBranchNames[static_cast<std::size_t>(b)]; }

Phase parse_phase(std::string_view s) {
  for (std::size_t i = 0; i < kPhases; ++i)
    if (s == kPhaseNames[i]) return static_cast<Phase>(i);
  throw ConfigError("unknown phase: " + std::string(s));
}

Measure parse_measure(std::string_view s) {
  for (std::size_t i = 0; i < kMeasures; ++i)
    if (s == kMeasureNames[i]) return static_cast<Measure>(i);
  throw ConfigError("unknown measure: " + std::string(s));
}

std::uint64_t bytecode_estimate(const PartitionStats& s, const BytecodeWeights& w) {
  return w.w_n * s.n_prime + w.w_I1 * s.I1 + w.w_I2 * s.I2 + w.w_X * (s.l_at_K - s.delta) +
         w.w_Y * s.s_at_Kprime + w.w_const;
}

void check_partition_identities(const PartitionStats& s) {
  if (s.I1 + s.I2 + s.I3 + s.k != s.n_prime) throw InstrumentationError(fail_message(s, "I1+I2+I3 = n'-k"));
  if (s.delta > 1) throw InstrumentationError(fail_message(s, "delta in {0,1}"));
  if (s.K != s.I1 + s.I2 + s.delta) throw InstrumentationError(fail_message(s, "|K| = I1+I2+delta"));
  if (s.G != s.I3) throw InstrumentationError(fail_message(s, "|G| = I3"));
  if (s.L != s.I1) throw InstrumentationError(fail_message(s, "|L| = I1"));
  if (s.l_at_K < s.delta) throw InstrumentationError(fail_message(s, "l@K >= delta"));
  if (s.comparisons != s.K + s.G + s.I2 + s.l_at_K + s.s_at_G + s.delta)
    throw InstrumentationError(fail_message(s, "comparisons"));
  if (s.swaps != s.I1 + s.l_at_K) throw InstrumentationError(fail_message(s, "swaps = I1 + l@K"));
  if (s.scanned != (s.n_prime - s.k) + s.I1 + s.delta)
    throw InstrumentationError(fail_message(s, "scanned = (n'-k) + I1 + delta"));
}

CountingMeter::CountingMeter(MeterOptions options) : options_(std::move(options)) {
  if (options_.cache) cache_.emplace(*options_.cache);
}

void CountingMeter::scan(ScanRole role, std::size_t i, ElemClass c) {
  (void)i;
  ++cur()[idx(Measure::scanned)];
  ++part_.scanned;
  switch (role) {
    case ScanRole::k:
      ++part_.K;
      last_k_large_ = c == ElemClass::large;
      if (c == ElemClass::small) ++part_.s_at_Kprime;
      if (c == ElemClass::large) ++part_.l_at_K;
      break;
    case ScanRole::g:
      ++part_.G;
      if (c == ElemClass::small) ++part_.s_at_G;
      break;
    case ScanRole::l:
      ++part_.L;
      break;
    case ScanRole::cqs:
    case ScanRole::insertion:
      break;
  }
}

void CountingMeter::branch(std::string_view label) {
  for (std::size_t i = 0; i < kBranches; ++i) {
    if (label == kBranchNames[i]) {
      ++branches_[i];
      return;
    }
  }
  ++other_branches_[std::string(label)];
}

std::map<std::string, std::uint64_t> CountingMeter::branch_counts() const {
  std::map<std::string, std::uint64_t> out = other_branches_;
  for (std::size_t i = 0; i < kBranches; ++i)
    if (branches_[i]) out[kBranchNames[i]] += branches_[i];
  return out;
}

std::uint64_t CountingMeter::total(Measure m) const {
  std::uint64_t t = 0;
  for (const auto& row : counts_) t += row[idx(m)];
  return t;
}

void CountingMeter::begin_partition(std::uint64_t n_prime, std::uint64_t k) {
  if (in_partition_) throw InstrumentationError("nested partition");
  in_partition_ = true;
  part_ = PartitionStats{};
  part_.n_prime = n_prime;
  part_.k = k;
  last_k_large_ = false;
  line1213_at_begin_ = branches_[1] + branches_[2];
  phase_ = Phase::partition;
}

void CountingMeter::record(PartitionStats& s) {
  in_partition_ = false;
  ++partitions_;
  if (!first_) first_ = s;
  if (options_.keep_partition_log) log_.push_back(s);
}

PartitionStats CountingMeter::end_partition(std::uint64_t I1, std::uint64_t I2, std::uint64_t I3,
                                            std::uint64_t overshoot) {
  if (!in_partition_) throw InstrumentationError("end_partition without begin_partition");
  PartitionStats s = part_;
  s.I1 = I1;
  s.I2 = I2;
  s.I3 = I3;
  if (overshoot < 1 || overshoot > 2) throw InstrumentationError("k must overshoot g by 1 or 2");
  s.delta = overshoot - 1;
  if (options_.check_identities) {
    check_partition_identities(s);
    if (s.delta == 1 && !last_k_large_)
      throw InstrumentationError(fail_message(s, "crossing element large iff delta = 1"));
    if (branches_[1] + branches_[2] - line1213_at_begin_ != s.l_at_K)
      throw InstrumentationError(fail_message(s, "line12 + line13 swaps = l@K"));
  }
  s.bytecodes = bytecode_estimate(s, options_.weights);
  counts_[pidx(Phase::partition)][idx(Measure::bytecodes)] += s.bytecodes;
  record(s);
  return s;
}

PartitionStats CountingMeter::end_cqs_partition(std::uint64_t I1, std::uint64_t I3) {
  if (!in_partition_) throw InstrumentationError("end_partition without begin_partition");
  PartitionStats s = part_;
  s.I1 = I1;
  s.I3 = I3;
  if (options_.check_identities) {
    if (s.I1 + s.I3 + s.k != s.n_prime) throw InstrumentationError(fail_message(s, "I1+I3 = n'-k"));
    if (s.comparisons != s.scanned) throw InstrumentationError(fail_message(s, "comparisons = scanned"));
  }
  record(s);
  return s;
}

CostReport CostReport::from_meter(const CountingMeter& m) {
  CostReport r;
  r.add_trial(m);
  return r;
}

void CostReport::add_trial(const CountingMeter& m) {
  std::array<std::array<std::uint64_t, kMeasures>, kPhases> c{};
  for (Phase p : kAllPhases)
    for (Measure x : kAllMeasures) c[pi(p)][mi(x)] = m.count(p, x);
  add_trial(c);
}

void CostReport::add_trial(const std::array<std::array<std::uint64_t, kMeasures>, kPhases>& counts) {
  ++trials_;
  for (std::size_t x = 0; x < kMeasures; ++x) {
    std::uint64_t tot = 0;
    for (std::size_t p = 0; p < kPhases; ++p) {
      std::uint64_t v = counts[p][x];
      cells_[p][x].sum += v;
      cells_[p][x].sum_sq += static_cast<unsigned __int128>(v) * v;
      tot += v;
    }
    totals_[x].sum += tot;
    totals_[x].sum_sq += static_cast<unsigned __int128>(tot) * tot;
  }
}

std::uint64_t CostReport::total_sum(Measure m) const { return totals_[mi(m)].sum; }

namespace {

double cell_mean(const CostReport::Cell& c, std::uint64_t n) {
  return n == 0 ? 0.0 : static_cast<double>(c.sum) / static_cast<double>(n);
}

double cell_stderr(const CostReport::Cell& c, std::uint64_t n) {
  if (n < 2) return 0.0;
  // n * sum_sq - sum^2 is exact in 128 bits for any realistic run
  unsigned __int128 a = static_cast<unsigned __int128>(n) * c.sum_sq;
  unsigned __int128 b = static_cast<unsigned __int128>(c.sum) * c.sum;
  long double num = a >= b ? static_cast<long double>(a - b) : 0.0L;
  long double nn = static_cast<long double>(n);
  long double var = num / (nn * (nn - 1));
  return static_cast<double>(std::sqrt(var / nn));
}

}  // namespace

double CostReport::mean(Phase p, Measure m) const { return cell_mean(cells_[pi(p)][mi(m)], trials_); }
double CostReport::total_mean(Measure m) const { return cell_mean(totals_[mi(m)], trials_); }
double CostReport::stderr_of(Phase p, Measure m) const { return cell_stderr(cells_[pi(p)][mi(m)], trials_); }
double CostReport::total_stderr(Measure m) const { return cell_stderr(totals_[mi(m)], trials_); }

CostReport merge_reports(const std::vector<CostReport>& reports) {
  if (reports.empty()) throw ConfigError("merge_reports needs at least one report");
  CostReport out;
  for (const auto& r : reports) {
    out.trials_ += r.trials_;
    for (std::size_t x = 0; x < kMeasures; ++x) {
      for (std::size_t p = 0; p < kPhases; ++p) {
        out.cells_[p][x].sum += r.cells_[p][x].sum;
        out.cells_[p][x].sum_sq += r.cells_[p][x].sum_sq;
      }
      out.totals_[x].sum += r.totals_[x].sum;
      out.totals_[x].sum_sq += r.totals_[x].sum_sq;
    }
  }
  return out;
}

bool operator==(const CostReport& a, const CostReport& b) {
  if (a.trials_ != b.trials_) return false;
  for (std::size_t x = 0; x < kMeasures; ++x) {
    for (std::size_t p = 0; p < kPhases; ++p)
      if (a.cells_[p][x].sum != b.cells_[p][x].sum || a.cells_[p][x].sum_sq != b.cells_[p][x].sum_sq)
        return false;
    if (a.totals_[x].sum != b.totals_[x].sum || a.totals_[x].sum_sq != b.totals_[x].sum_sq) return false;
  }
  return true;
}

}  // namespace dpqs
