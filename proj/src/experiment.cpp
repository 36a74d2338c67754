#include "dpqs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

#include "dpqs/sorters.hpp"

namespace dpqs {

const char* to_string(Algorithm a) { return a == Algorithm::yqs ? "yqs" : "cqs"; }

Algorithm parse_algorithm(std::string_view s) {
  if (s == "yqs") return Algorithm::yqs;
  if (s == "cqs") return Algorithm::cqs;
  throw ConfigError("unknown algorithm: " + std::string(s));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(master) ^ n) ^ trial);
}

std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t bound) {
  if (bound <= 1) return 0;
  // accept only below the largest multiple of bound
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = engine();
  while (x >= limit);
  return x % bound;
}

std::vector<std::int64_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::int64_t> a(n);
  std::iota(a.begin(), a.end(), std::int64_t{0});
  std::mt19937_64 engine(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(a[i - 1], a[bounded_draw(engine, i)]);
  return a;
}

void validate(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw ConfigError("trials must be at least 1");
  for (auto n : spec.ns)
    if (n < 1) throw ConfigError("n must be at least 1");
  if (spec.algorithm == Algorithm::yqs)
    validate(SortConfig{spec.t, spec.w});
  else
    validate(CqsSortConfig{spec.cqs_t, spec.w});
  if (spec.cache) validate(*spec.cache);
}

std::vector<std::size_t> power_sweep(int a, int b) {
  if (a < 0 || b < a || b > 40) throw ConfigError("power sweep needs 0 <= a <= b <= 40");
  std::vector<std::size_t> out;
  for (int e = a; e <= b; ++e) out.push_back(std::size_t{1} << e);
  return out;
}

namespace {

MeterOptions options_for(const ExperimentSpec& spec) {
  MeterOptions o;
  o.cache = spec.cache;
  return o;
}

CountTable counts_of(const CountingMeter& m) {
  CountTable c{};
  for (Phase p : kAllPhases)
    for (Measure x : kAllMeasures) c[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)] = m.count(p, x);
  return c;
}

void sort_with(const ExperimentSpec& spec, std::vector<std::int64_t>& a, CountingMeter& m) {
  std::span<std::int64_t> s(a);
  if (spec.algorithm == Algorithm::yqs)
    sort_yqs(s, SortConfig{spec.t, spec.w}, m);
  else
    sort_cqs(s, CqsSortConfig{spec.cqs_t, spec.w}, m);
}

ExperimentRow run_n(const ExperimentSpec& spec, std::size_t n, bool parallel) {
  std::vector<CountTable> per_trial(static_cast<std::size_t>(spec.trials));
  const long trials = spec.trials;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < trials; ++i) per_trial[i] = run_trial(spec, n, static_cast<int>(i));
  ExperimentRow row;
  row.n = n;
  for (const auto& c : per_trial) row.report.add_trial(c);
  return row;
}

}  // namespace

CountTable run_on_input(const ExperimentSpec& spec, std::vector<std::int64_t>& input) {
  CountingMeter m(options_for(spec));
  sort_with(spec, input, m);
  return counts_of(m);
}

CountTable run_trial(const ExperimentSpec& spec, std::size_t n, int trial) {
  auto a = random_permutation(n, trial_seed(spec.seed, n, static_cast<std::uint64_t>(trial)));
  return run_on_input(spec, a);
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  std::vector<ExperimentRow> rows;
  for (auto n : spec.ns) rows.push_back(run_n(spec, n, true));
  return rows;
}

std::vector<ExperimentRow> run_experiment_serial(const ExperimentSpec& spec) {
  validate(spec);
  std::vector<ExperimentRow> rows;
  for (auto n : spec.ns) rows.push_back(run_n(spec, n, false));
  return rows;
}

Rational OracleResult::total(Measure m) const {
  Rational t = 0;
  for (const auto& row : mean) t += row[static_cast<std::size_t>(m)];
  return t;
}

OracleResult exact_average_oracle(const ExperimentSpec& spec, std::size_t n) {
  if (n > kOracleMaxN) throw ConfigError("oracle enumerates n! inputs; n must be at most 9");
  if (n < 1) throw ConfigError("oracle needs n >= 1");
  ExperimentSpec s = spec;
  s.cache.reset();
  validate(s);
  std::vector<std::int64_t> base(n);
  std::iota(base.begin(), base.end(), std::int64_t{0});
  CountTable sums{};
  std::array<std::uint64_t, 9> first{};
  std::uint64_t count = 0;
  do {
    std::vector<std::int64_t> a = base;
    CountingMeter m;
    sort_with(s, a, m);
    if (!std::is_sorted(a.begin(), a.end())) throw InstrumentationError("oracle: output not sorted");
    for (Phase p : kAllPhases)
      for (Measure x : kAllMeasures)
        sums[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)] += m.count(p, x);
    if (const auto& f = m.first_partition()) {
      first[0] += f->comparisons;
      first[1] += f->swaps;
      first[2] += f->scanned;
      first[3] += f->bytecodes;
      first[4] += f->I1;
      first[5] += f->I2;
      first[6] += f->I3;
      first[7] += f->delta;
      first[8] += f->s_at_Kprime;
    }
    ++count;
  } while (std::next_permutation(base.begin(), base.end()));

  OracleResult r;
  r.permutations = count;
  const Rational c(static_cast<unsigned long long>(count));
  for (std::size_t p = 0; p < kPhases; ++p)
    for (std::size_t x = 0; x < kMeasures; ++x) r.mean[p][x] = Rational(static_cast<unsigned long long>(sums[p][x])) / c;
  auto avg = [&](std::size_t i) { return Rational(static_cast<unsigned long long>(first[i])) / c; };
  r.first_comparisons = avg(0);
  r.first_swaps = avg(1);
  r.first_scanned = avg(2);
  r.first_bytecodes = avg(3);
  r.first_I1 = avg(4);
  r.first_I2 = avg(5);
  r.first_I3 = avg(6);
  r.first_delta = avg(7);
  r.first_s_at_Kprime = avg(8);
  return r;
}

namespace {

std::optional<CostMeasure> theory_measure(Measure m) {
  switch (m) {
    case Measure::comparisons: return CostMeasure::comparisons;
    case Measure::swaps: return CostMeasure::swaps;
    case Measure::bytecodes: return CostMeasure::bytecodes;
    case Measure::scanned:
    case Measure::cache_misses: return CostMeasure::scanned;
    case Measure::writes: return std::nullopt;
  }
  return std::nullopt;
}

double ratio_for(const ExperimentSpec& spec, CostMeasure m) {
  if (spec.algorithm == Algorithm::yqs) return yqs_coefficients(spec.t).ratio_d(m);
  return cqs_coefficients(spec.cqs_t).ratio_d(m);
}

}  // namespace

std::vector<ValidationRow> validation_rows(const ExperimentSpec& spec, const std::vector<ExperimentRow>& runs) {
  std::vector<Measure> measures{Measure::comparisons, Measure::swaps, Measure::writes, Measure::scanned,
                                Measure::bytecodes};
  if (spec.cache) measures.push_back(Measure::cache_misses);
  std::vector<ValidationRow> out;
  for (const auto& run : runs) {
    const double n = static_cast<double>(run.n);
    const double nlnn = n > 1 ? n * std::log(n) : 0.0;
    for (Measure m : measures) {
      const auto tm = theory_measure(m);
      const double ratio = tm ? ratio_for(spec, *tm) : 0.0;
      std::optional<double> asym, trunc;
      if (tm && n > 1) {
        if (m == Measure::cache_misses) {
          const double B = static_cast<double>(spec.cache->B);
          const double M = static_cast<double>(spec.cache->M);
          asym = ratio * (n / B) * std::log(n);
          if (n > M) trunc = ratio * (n / B) * std::log(n / M);
        } else {
          asym = ratio * nlnn;
          if (n > spec.w) trunc = leading_term(ratio, n, static_cast<double>(spec.w));
        }
      }
      auto make = [&](std::optional<Phase> ph, double mean, double se) {
        ValidationRow r;
        r.n = run.n;
        r.measure = m;
        r.phase = ph;
        r.mean = mean;
        r.stderr_ = se;
        r.ratio = ratio;
        r.empirical_norm = nlnn > 0 ? mean / nlnn : 0.0;
        if (!ph || *ph == Phase::partition) {
          r.asymptotic = asym;
          r.truncated = trunc;
        }
        return r;
      };
      for (Phase p : kAllPhases) out.push_back(make(p, run.report.mean(p, m), run.report.stderr_of(p, m)));
      out.push_back(make(std::nullopt, run.report.total_mean(m), run.report.total_stderr(m)));
    }
  }
  return out;
}

std::vector<ValidationRow> validate_sweep(const ExperimentSpec& spec) {
  return validation_rows(spec, run_experiment(spec));
}

std::vector<CompareRow> compare_algorithms(const std::vector<int>& ks) {
  std::vector<CompareRow> out;
  for (int k : ks) {
    CompareRow row;
    row.k = k;
    if (k == 0) {
      row.cqs_t = {0, 0};
      row.yqs_t = {0, 0, 0};
    } else if (k >= 5 && k % 6 == 5) {
      const int lambda = (k - 2) / 3;
      const int c = (k - 1) / 2;
      row.cqs_t = {c, c};
      row.yqs_t = {lambda, lambda, lambda};
    } else {
      row.flagged = true;
      out.push_back(row);
      continue;
    }
    const CoeffSet cq = cqs_coefficients(row.cqs_t);
    const CoeffSet yq = yqs_coefficients(row.yqs_t);
    for (std::size_t i = 0; i < kCostMeasures.size(); ++i) {
      row.cqs[i] = cq.ratio_d(kCostMeasures[i]);
      row.yqs[i] = yq.ratio_d(kCostMeasures[i]);
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace dpqs
