#pragma once

#include <vector>

#include "dpqs/theory.hpp"

namespace dpqs {

struct OptimumReport {
  CostMeasure measure{};
  int k = 0;
  SamplingParam t{};
  Rational value;
  std::vector<SamplingParam> all_optima;  // ascending
  double value_d() const { return to_double(value); }
};

// Exhaustive search over t1 + t2 + t3 = k - 2 in exact arithmetic.
OptimumReport optimal_t(int k, CostMeasure measure);
OptimumReport optimal_t_serial(int k, CostMeasure measure);

// Every candidate's q-value, in enumeration order (t1 ascending, then t2).
std::vector<std::pair<SamplingParam, Rational>> all_q_values(int k, CostMeasure measure, bool parallel = true);

struct TauOptimum {
  CostMeasure measure{};
  Tau tau{};
  double value = 0;
  std::vector<Tau> all_optima;
};

// q*(tau) with the vertex convention: 0 if a(tau) = 0, +inf if only H(tau) = 0.
double tau_objective(const Tau& tau, CostMeasure measure);

TauOptimum optimal_tau(CostMeasure measure, double tol = 1e-8);

Rational swap_optimum_value(int k);

struct RuleOfThumb {
  SamplingParam t{};
  bool matches = false;         // t itself is an optimum
  bool mirror_matches = false;  // (t1, t3, t2) is an optimum
};

SamplingParam scans_rule_of_thumb_param(int k);
RuleOfThumb scans_rule_of_thumb(int k);

}  // namespace dpqs
