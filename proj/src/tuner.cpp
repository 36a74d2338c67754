#include "dpqs/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dpqs {

namespace {

struct Harmonics {
  std::vector<Rational> h;
  explicit Harmonics(int upto) : h(static_cast<std::size_t>(upto) + 1) {
    for (int i = 1; i <= upto; ++i) h[i] = h[i - 1] + frac(1, i);
  }
  const Rational& operator[](int i) const { return h[static_cast<std::size_t>(i)]; }
};

Rational q_value(const SamplingParam& t, CostMeasure m, const Harmonics& H) {
  const std::int64_t t1 = t.t1, t2 = t.t2, t3 = t.t3, k = t.k();
  const Rational k1 = k + 1;
  const Rational k12 = Rational((k + 1) * (k + 2));
  Rational a;
  switch (m) {
    case CostMeasure::comparisons:
      a = 1 + Rational(t2 + 1) / k1 + Rational((2 * t1 + t2 + 3) * (t3 + 1)) / k12;
      break;
    case CostMeasure::swaps:
      a = Rational(t1 + 1) / k1 + Rational((t1 + t2 + 2) * (t3 + 1)) / k12;
      break;
    case CostMeasure::bytecodes:
      a = 10 + 13 * Rational(t1 + 1) / k1 + 5 * Rational(t2 + 1) / k1 +
          11 * Rational((t1 + t2 + 2) * (t3 + 1)) / k12 + Rational((t1 + 1) * (t1 + t2 + 3)) / k12;
      break;
    case CostMeasure::scanned:
      a = 1 + Rational(t1 + 1) / k1;
      break;
  }
  const int kk = static_cast<int>(k);
  Rational ent = 0;
  for (int r = 0; r < 3; ++r) ent += Rational(t[r] + 1) / k1 * (H[kk + 1] - H[t[r] + 1]);
  return a / ent;
}

std::vector<SamplingParam> candidates(int k) {
  std::vector<SamplingParam> out;
  for (int t1 = 0; t1 <= k - 2; ++t1)
    for (int t2 = 0; t1 + t2 <= k - 2; ++t2) out.push_back({t1, t2, k - 2 - t1 - t2});
  return out;
}

OptimumReport reduce(int k, CostMeasure m, const std::vector<std::pair<SamplingParam, Rational>>& qs) {
  OptimumReport rep;
  rep.measure = m;
  rep.k = k;
  rep.value = qs.front().second;
  for (const auto& [t, q] : qs)
    if (q < rep.value) rep.value = q;
  for (const auto& [t, q] : qs)
    if (q == rep.value) rep.all_optima.push_back(t);
  std::sort(rep.all_optima.begin(), rep.all_optima.end());
  rep.t = rep.all_optima.front();
  return rep;
}

}  // namespace

std::vector<std::pair<SamplingParam, Rational>> all_q_values(int k, CostMeasure measure, bool parallel) {
  if (k < 2) throw ConfigError("sample size k must be at least 2");
  const Harmonics H(k + 1);
  const auto cand = candidates(k);
  std::vector<std::pair<SamplingParam, Rational>> out(cand.size());
  const long n = static_cast<long>(cand.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (long i = 0; i < n; ++i) out[i] = {cand[i], q_value(cand[i], measure, H)};
  return out;
}

OptimumReport optimal_t(int k, CostMeasure measure) { return reduce(k, measure, all_q_values(k, measure, true)); }

OptimumReport optimal_t_serial(int k, CostMeasure measure) {
  return reduce(k, measure, all_q_values(k, measure, false));
}

double tau_objective(const Tau& tau, CostMeasure measure) {
  return continuous_coefficients(tau).ratio(measure);
}

namespace {

Tau make_tau(double t1, double t2) {
  double t3 = 1 - t1 - t2;
  if (t3 < 0) t3 = 0;
  return {t1, t2, t3};
}

bool on_simplex(double t1, double t2) { return t1 >= 0 && t2 >= 0 && t1 + t2 <= 1 + 1e-15; }

// Pattern search in (tau1, tau2) with step halving.
std::pair<Tau, double> refine(Tau start, CostMeasure m, double step, double tol) {
  double x = start[0], y = start[1];
  double best = tau_objective(make_tau(x, y), m);
  constexpr double dirs[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  while (step > tol) {
    bool moved = false;
    for (const auto& d : dirs) {
      double nx = x + d[0] * step, ny = y + d[1] * step;
      if (!on_simplex(nx, ny)) continue;
      double v = tau_objective(make_tau(nx, ny), m);
      if (v < best) {
        best = v;
        x = nx;
        y = ny;
        moved = true;
      }
    }
    if (!moved) step /= 2;
  }
  return {make_tau(x, y), best};
}

}  // namespace

TauOptimum optimal_tau(CostMeasure measure, double tol) {
  if (!(tol > 0)) throw ConfigError("optimal_tau: tol must be positive");
  constexpr int kGrid = 200;
  std::vector<std::pair<Tau, double>> grid;
  for (int i = 0; i <= kGrid; ++i)
    for (int j = 0; i + j <= kGrid; ++j) {
      Tau tau{static_cast<double>(i) / kGrid, static_cast<double>(j) / kGrid,
              static_cast<double>(kGrid - i - j) / kGrid};
      grid.push_back({tau, tau_objective(tau, measure)});
    }
  double gmin = std::numeric_limits<double>::infinity();
  for (const auto& [tau, v] : grid) gmin = std::min(gmin, v);

  std::vector<std::pair<Tau, double>> refined;
  for (const auto& [tau, v] : grid) {
    if (v > gmin + 1e-12) continue;
    refined.push_back(refine(tau, measure, 1.0 / kGrid, tol));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [tau, v] : refined) best = std::min(best, v);

  TauOptimum out;
  out.measure = measure;
  out.value = best;
  for (const auto& [tau, v] : refined) {
    if (v > best + tol) continue;
    bool dup = false;
    for (const auto& o : out.all_optima)
      if (std::abs(o[0] - tau[0]) < 1e-6 && std::abs(o[1] - tau[1]) < 1e-6) dup = true;
    if (!dup) out.all_optima.push_back(tau);
  }
  std::sort(out.all_optima.begin(), out.all_optima.end());
  out.tau = out.all_optima.front();
  return out;
}

Rational swap_optimum_value(int k) {
  if (k < 2) throw ConfigError("sample size k must be at least 2");
  const Rational Hk = harmonic(k);
  return Rational(2 * k * (k + 1)) / ((2 * k * Hk - 1) * (k + 2));
}

SamplingParam scans_rule_of_thumb_param(int k) {
  if (k < 2) throw ConfigError("sample size k must be at least 2");
  const double q = std::sqrt(2.0) - 1;
  const int m = k - 2;
  // the tiny nudges keep floor/ceil stable when the product lands on an integer
  int t1 = static_cast<int>(std::floor(q * q * m + 1e-9));
  int t2 = static_cast<int>(std::ceil(q * m - 1e-9));
  t1 = std::min(t1, m);
  t2 = std::min(t2, m - t1);
  return {t1, t2, m - t1 - t2};
}

RuleOfThumb scans_rule_of_thumb(int k) {
  RuleOfThumb r;
  r.t = scans_rule_of_thumb_param(k);
  const OptimumReport opt = optimal_t(k, CostMeasure::scanned);
  const SamplingParam mirror{r.t.t1, r.t.t3, r.t.t2};
  for (const auto& o : opt.all_optima) {
    if (o == r.t) r.matches = true;
    if (o == mirror) r.mirror_matches = true;
  }
  return r;
}

}  // namespace dpqs
