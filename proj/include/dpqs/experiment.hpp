#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dpqs/cachesim.hpp"
#include "dpqs/meter.hpp"
#include "dpqs/rational.hpp"
#include "dpqs/sampling.hpp"
#include "dpqs/theory.hpp"

namespace dpqs {

enum class Algorithm : std::uint8_t { yqs, cqs };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view s);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial);

// Uniform in [0, bound) by rejection, so results do not depend on the standard library.
std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t bound);

// Fisher-Yates shuffle of 0..n-1 driven by mt19937_64(seed).
std::vector<std::int64_t> random_permutation(std::size_t n, std::uint64_t seed);

struct ExperimentSpec {
  Algorithm algorithm = Algorithm::yqs;
  SamplingParam t{};
  CqsSamplingParam cqs_t{};
  int w = 46;
  std::vector<std::size_t> ns;
  int trials = 1;
  std::uint64_t seed = 1;
  std::optional<CacheConfig> cache;
};

void validate(const ExperimentSpec& spec);

// Powers of two 2^a .. 2^b.
std::vector<std::size_t> power_sweep(int a, int b);

using CountTable = std::array<std::array<std::uint64_t, kMeasures>, kPhases>;

CountTable run_trial(const ExperimentSpec& spec, std::size_t n, int trial);
CountTable run_on_input(const ExperimentSpec& spec, std::vector<std::int64_t>& input);

struct ExperimentRow {
  std::size_t n = 0;
  CostReport report;
};

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);
std::vector<ExperimentRow> run_experiment_serial(const ExperimentSpec& spec);

struct OracleResult {
  std::uint64_t permutations = 0;
  std::array<std::array<Rational, kMeasures>, kPhases> mean;
  // first partitioning step; zero when the input is never partitioned
  Rational first_comparisons, first_swaps, first_scanned, first_bytecodes;
  Rational first_I1, first_I2, first_I3, first_delta, first_s_at_Kprime;
  Rational total(Measure m) const;
};

inline constexpr std::size_t kOracleMaxN = 9;

OracleResult exact_average_oracle(const ExperimentSpec& spec, std::size_t n);

struct ValidationRow {
  std::size_t n = 0;
  Measure measure{};
  std::optional<Phase> phase;  // empty: all phases
  double mean = 0;
  double stderr_ = 0;
  double ratio = 0;            // a / H, 0 when no theory applies
  double empirical_norm = 0;   // mean / (n ln n)
  std::optional<double> asymptotic;
  std::optional<double> truncated;
};

std::vector<ValidationRow> validation_rows(const ExperimentSpec& spec, const std::vector<ExperimentRow>& runs);
std::vector<ValidationRow> validate_sweep(const ExperimentSpec& spec);

struct CompareRow {
  int k = 0;  // 0 means no sampling
  bool flagged = false;
  CqsSamplingParam cqs_t{};
  SamplingParam yqs_t{};
  std::array<double, 4> cqs{};  // comparisons, swaps, bytecodes, scanned
  std::array<double, 4> yqs{};
};

std::vector<CompareRow> compare_algorithms(const std::vector<int>& ks);

}  // namespace dpqs
