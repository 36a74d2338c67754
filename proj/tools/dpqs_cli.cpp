#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <span>

#include "dpqs/experiment.hpp"
#include "dpqs/report_io.hpp"
#include "dpqs/sorters.hpp"
#include "dpqs/theory.hpp"
#include "dpqs/tuner.hpp"

using namespace dpqs;

namespace {

struct Common {
  std::string algo = "yqs";
  std::string t;
  int w = 46;
  std::uint64_t seed = 1;
};

ExperimentSpec make_spec(const Common& c) {
  ExperimentSpec s;
  s.algorithm = parse_algorithm(c.algo);
  if (s.algorithm == Algorithm::yqs)
    s.t = c.t.empty() ? SamplingParam{} : parse_sampling(c.t);
  else
    s.cqs_t = c.t.empty() ? CqsSamplingParam{} : parse_cqs_sampling(c.t);
  s.w = c.w;
  s.seed = c.seed;
  return s;
}

std::vector<CostMeasure> measures_from(const std::string& m) {
  if (m == "all") return {kCostMeasures.begin(), kCostMeasures.end()};
  return {parse_cost_measure(m)};
}

int cmd_sort(const Common& c, const std::string& n_text, bool verify) {
  ExperimentSpec s = make_spec(c);
  const std::size_t n = parse_size(n_text);
  s.ns = {n};
  validate(s);
  auto a = random_permutation(n, trial_seed(s.seed, n, 0));
  const CountTable counts = run_on_input(s, a);
  if (verify) {
    bool ok = std::is_sorted(a.begin(), a.end());
    for (std::size_t i = 0; ok && i < a.size(); ++i) ok = a[i] == static_cast<std::int64_t>(i);
    std::cout << "verify: " << (ok ? "sorted" : "NOT SORTED") << '\n';
    if (!ok) return 1;
  }
  std::cout << "n=" << n << " algo=" << c.algo << " w=" << c.w << '\n';
  for (Measure m : kAllMeasures) {
    if (m == Measure::cache_misses) continue;
    std::uint64_t total = 0;
    std::cout << to_string(m) << ':';
    for (Phase p : kAllPhases) {
      auto v = counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)];
      total += v;
      std::cout << ' ' << to_string(p) << '=' << v;
    }
    std::cout << " total=" << total << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& t_text, const std::string& cqs_text, bool json) {
  nlohmann::json out = nlohmann::json::array();
  if (!t_text.empty()) {
    const SamplingParam t = parse_sampling(t_text);
    const CoeffSet c = yqs_coefficients(t);
    if (json)
      out.push_back(coeffs_json(t, c));
    else
      write_coeffs_text(std::cout, "yqs t=" + format_t(t), c);
  }
  if (!cqs_text.empty()) {
    const CqsSamplingParam t = parse_cqs_sampling(cqs_text);
    const CoeffSet c = cqs_coefficients(t);
    if (json)
      out.push_back(coeffs_json(t, c));
    else
      write_coeffs_text(std::cout, "cqs t=" + format_t(t), c);
  }
  if (json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  return 0;
}

int cmd_optimize(int k, const std::string& measure, bool continuous, double tol) {
  for (CostMeasure m : measures_from(measure)) {
    if (continuous)
      write_tau_optimum(std::cout, optimal_tau(m, tol));
    else
      write_optimum(std::cout, optimal_t(k, m));
  }
  return 0;
}

int cmd_bench(const Common& c, const std::string& n_min, const std::string& n_max, int trials, std::size_t cache_m,
              std::size_t cache_b, const std::string& out, bool serial) {
  ExperimentSpec s = make_spec(c);
  const std::size_t lo = parse_size(n_min), hi = parse_size(n_max);
  if (lo < 1 || hi < lo) throw ConfigError("need 1 <= n-min <= n-max");
  for (std::size_t n = lo; n <= hi; n *= 2) s.ns.push_back(n);
  s.trials = trials;
  if (cache_m) s.cache = CacheConfig{cache_m, cache_b};
  auto runs = serial ? run_experiment_serial(s) : run_experiment(s);
  auto rows = validation_rows(s, runs);
  if (out.empty() || out == "-") {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + out);
    write_bench_csv(f, rows);
  }
  return 0;
}

int cmd_oracle(const Common& c, std::size_t n) {
  ExperimentSpec s = make_spec(c);
  const OracleResult r = exact_average_oracle(s, n);
  write_oracle(std::cout, r);
  if (s.algorithm == Algorithm::yqs && static_cast<int>(n) > s.w) {
    const auto e = partition_expectations(s.t, static_cast<std::int64_t>(n));
    std::cout << "theory first partition: comparisons=" << e.T_C << " swaps=" << e.T_S << " scanned=" << e.T_SE
              << " bytecodes=" << e.T_BC << '\n';
  }
  return 0;
}

int cmd_compare(const std::string& ks_text) {
  std::vector<int> ks;
  std::stringstream ss(ks_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "none" || item == "0")
      ks.push_back(0);
    else
      ks.push_back(parse_int_list(item).front());
  }
  write_compare_table(std::cout, compare_algorithms(ks));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-pivot Quicksort laboratory"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algo", common.algo, "yqs or cqs")->check(CLI::IsMember({"yqs", "cqs"}));
    sub->add_option("--t", common.t, "sampling parameter, e.g. 1,1,1 (or 1,1 for cqs)");
    sub->add_option("--w", common.w, "insertion sort threshold");
    sub->add_option("--seed", common.seed, "master seed");
  };

  auto* sort = app.add_subcommand("sort", "sort one seeded random permutation and print counters");
  add_common(sort);
  std::string n_text = "1000";
  bool verify = false;
  sort->add_option("--n", n_text, "input size (e.g. 65536 or 2^16)");
  sort->add_flag("--verify", verify, "check the output is sorted");

  auto* analyze = app.add_subcommand("analyze", "leading-term coefficients");
  std::string t_text, cqs_text;
  bool json = false;
  analyze->add_option("--t", t_text, "dual-pivot sampling parameter");
  analyze->add_option("--cqs", cqs_text, "classic sampling parameter");
  analyze->add_flag("--json", json, "emit JSON");

  auto* optimize = app.add_subcommand("optimize", "optimal sampling parameters");
  int k = 5;
  std::string measure = "all";
  bool continuous = false;
  double tol = 1e-8;
  optimize->add_option("--k", k, "sample size");
  optimize->add_option("--measure", measure, "comparisons, swaps, bytecodes, scanned or all");
  optimize->add_flag("--continuous", continuous, "optimize over the continuous simplex");
  optimize->add_option("--tol", tol, "refinement tolerance");

  auto* bench = app.add_subcommand("bench", "run an n-sweep and write CSV");
  add_common(bench);
  std::string n_min = "2^5", n_max = "2^16", out;
  int trials = 100;
  std::size_t cache_m = 0, cache_b = 1;
  bool serial = false;
  bench->add_option("--n-min", n_min);
  bench->add_option("--n-max", n_max);
  bench->add_option("--trials", trials);
  bench->add_option("--cache-m", cache_m, "simulated cache capacity in elements");
  bench->add_option("--cache-b", cache_b, "simulated block size in elements");
  bench->add_option("--out", out, "CSV file (default stdout)");
  bench->add_flag("--serial", serial, "run trials on one thread");

  auto* oracle = app.add_subcommand("oracle", "exact means over all n! inputs");
  add_common(oracle);
  std::size_t oracle_n = 5;
  oracle->add_option("--n", oracle_n, "input size, at most 9");

  auto* compare = app.add_subcommand("compare", "classic vs dual-pivot coefficients");
  std::string ks = "none,5,11,17,23";
  compare->add_option("--k", ks, "sample sizes, k = 5 mod 6, or none");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sort) return cmd_sort(common, n_text, verify);
    if (*analyze) return cmd_analyze(t_text.empty() && cqs_text.empty() ? "0,0,0" : t_text, cqs_text, json);
    if (*optimize) return cmd_optimize(k, measure, continuous, tol);
    if (*bench) return cmd_bench(common, n_min, n_max, trials, cache_m, cache_b, out, serial);
    if (*oracle) return cmd_oracle(common, oracle_n);
    if (*compare) return cmd_compare(ks);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
