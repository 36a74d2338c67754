#include "dpqs/theory.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace dpqs {

namespace {

constexpr std::array<const char*, 4> kCostNames{"comparisons", "swaps", "bytecodes", "scanned"};

Rational entropy_term(std::int64_t t_r, std::int64_t k, const Rational& Hk1) {
  return frac(t_r + 1, k + 1) * (Hk1 - harmonic(t_r + 1));
}

}  // namespace

const char* to_string(CostMeasure m) { return kCostNames[static_cast<std::size_t>(m)]; }

CostMeasure parse_cost_measure(std::string_view s) {
  for (std::size_t i = 0; i < kCostNames.size(); ++i)
    if (s == kCostNames[i]) return static_cast<CostMeasure>(i);
  if (s == "scans" || s == "scanned_elements") return CostMeasure::scanned;
  if (s == "bytecode") return CostMeasure::bytecodes;
  throw ConfigError("unknown cost measure: " + std::string(s));
}

Rational harmonic(std::int64_t n) {
  if (n < 0) throw ConfigError("harmonic: n must be non-negative");
  Rational h = 0;
  for (std::int64_t i = 1; i <= n; ++i) h += frac(1, i);
  return h;
}

Rational discrete_entropy(const SamplingParam& t) {
  validate(t);
  const std::int64_t k = t.k();
  const Rational Hk1 = harmonic(k + 1);
  return entropy_term(t.t1, k, Hk1) + entropy_term(t.t2, k, Hk1) + entropy_term(t.t3, k, Hk1);
}

Rational discrete_entropy(const CqsSamplingParam& t) {
  validate(t);
  const std::int64_t k = t.k();
  const Rational Hk1 = harmonic(k + 1);
  return entropy_term(t.t1, k, Hk1) + entropy_term(t.t2, k, Hk1);
}

const Rational& CoeffSet::a(CostMeasure m) const {
  switch (m) {
    case CostMeasure::comparisons: return a_C;
    case CostMeasure::swaps: return a_S;
    case CostMeasure::bytecodes: return a_BC;
    case CostMeasure::scanned: return a_SE;
  }
  return a_C;
}

CoeffSet yqs_coefficients(const SamplingParam& t) {
  validate(t);
  const std::int64_t t1 = t.t1, t2 = t.t2, t3 = t.t3, k = t.k();
  const Rational k1 = k + 1;
  const Rational k12 = Rational((k + 1) * (k + 2));
  CoeffSet c;
  c.a_C = 1 + Rational(t2 + 1) / k1 + Rational((2 * t1 + t2 + 3) * (t3 + 1)) / k12;
  c.a_S = Rational(t1 + 1) / k1 + Rational((t1 + t2 + 2) * (t3 + 1)) / k12;
  c.a_SE = 1 + Rational(t1 + 1) / k1;
  c.a_BC = 10 + 13 * Rational(t1 + 1) / k1 + 5 * Rational(t2 + 1) / k1 +
           11 * Rational((t1 + t2 + 2) * (t3 + 1)) / k12 + Rational((t1 + 1) * (t1 + t2 + 3)) / k12;
  c.H = discrete_entropy(t);
  return c;
}

CoeffSet cqs_coefficients(const CqsSamplingParam& t) {
  validate(t);
  const std::int64_t k = t.k();
  CoeffSet c;
  c.a_C = 1;
  c.a_SE = 1;
  c.a_S = frac((t.t1 + 1) * (t.t2 + 1), (k + 1) * (k + 2));
  c.a_BC = 6 * c.a_C + 18 * c.a_S;
  c.H = discrete_entropy(t);
  return c;
}

double leading_term(double ratio, double n, std::optional<double> truncation) {
  if (!truncation) return ratio * n * std::log(n);
  if (*truncation < 1 || n <= *truncation) throw ConfigError("leading_term: need n > truncation >= 1");
  return ratio * n * std::log(n / *truncation);
}

PartitionExpectation partition_expectations(const SamplingParam& t, std::int64_t n) {
  validate(t);
  const std::int64_t k = t.k();
  if (n < k) throw ConfigError("partition_expectations: n must be at least k");
  PartitionExpectation e;
  e.T_BC = 10 * Rational(n);
  if (n == k) return e;
  const std::int64_t t1 = t.t1, t2 = t.t2, t3 = t.t3;
  const Rational k1 = k + 1;
  const Rational k12 = Rational((k + 1) * (k + 2));
  const Rational m = n - k;
  e.I1 = Rational(t1 + 1) / k1 * m;
  e.I2 = Rational(t2 + 1) / k1 * m;
  e.I3 = Rational(t3 + 1) / k1 * m;
  e.delta = Rational(t3 + 1) / k1;
  e.hyp_I3_I1 = Rational((t1 + 1) * (t3 + 1)) / k12 * (m - 1);
  e.hyp_I12_I3 = Rational((t1 + t2 + 2) * (t3 + 1)) / k12 * (m - 1);
  e.s_at_Kprime = Rational((t1 + 1) * (t1 + t2 + 3)) / k12 * (m - 1) + Rational(t1 + 1) / k1;
  e.T_C = m + e.I2 + e.hyp_I3_I1 + e.hyp_I12_I3 + 3 * e.delta;
  e.T_S = e.I1 + e.hyp_I12_I3 + e.delta;
  e.T_SE = m + e.I1 + e.delta;
  e.T_BC = 10 * Rational(n) + 13 * e.I1 + 5 * e.I2 + 11 * e.hyp_I12_I3 + e.s_at_Kprime;
  return e;
}

std::vector<Rational> subproblem_pmf(int r, std::int64_t n, const SamplingParam& t) {
  validate(t);
  if (r < 1 || r > 3) throw ConfigError("subproblem_pmf: r must be 1, 2 or 3");
  const std::int64_t k = t.k();
  if (n < k) throw ConfigError("subproblem_pmf: n must be at least k");
  const std::int64_t tr = t[r - 1];
  const std::int64_t m = n - k;
  const Rational denom = rising(Rational(k + 1), m);
  std::vector<Rational> p(static_cast<std::size_t>(m + tr + 1), Rational(0));
  for (std::int64_t i = 0; i <= m; ++i) {
    Rational num = Rational(binomial(m, i)) * rising(Rational(tr + 1), i) * rising(Rational(k - tr), m - i);
    p[static_cast<std::size_t>(tr + i)] = num / denom;
  }
  return p;
}

double beta_fn(const std::vector<double>& alphas) {
  if (alphas.empty()) throw ConfigError("beta_fn: need at least one argument");
  bool small_ints = true;
  for (double a : alphas) {
    if (!(a > 0)) throw ConfigError("beta_fn: arguments must be positive");
    if (a != std::floor(a) || a > 60) small_ints = false;
  }
  if (small_ints) {
    std::vector<std::int64_t> ints(alphas.begin(), alphas.end());
    return to_double(beta_exact(ints));
  }
  double s = 0, lg = 0;
  for (double a : alphas) {
    lg += std::lgamma(a);
    s += a;
  }
  return std::exp(lg - std::lgamma(s));
}

Rational beta_exact(const std::vector<std::int64_t>& alphas) {
  if (alphas.empty()) throw ConfigError("beta_exact: need at least one argument");
  BigInt num = 1;
  std::int64_t s = 0;
  for (auto a : alphas) {
    if (a < 1) throw ConfigError("beta_exact: arguments must be positive integers");
    num *= factorial(a - 1);
    s += a;
  }
  return Rational(num) / Rational(factorial(s - 1));
}

Rational beta_ln(std::int64_t a1, std::int64_t a2) {
  if (a1 < 1 || a2 < 1) throw ConfigError("beta_ln: arguments must be positive integers");
  return beta_exact({a1, a2}) * (harmonic(a1 + a2 - 1) - harmonic(a1 - 1));
}

Rational dirichlet_mixed_moment(const std::vector<Rational>& alphas, const std::vector<std::int64_t>& ms) {
  if (alphas.size() != ms.size() || alphas.empty()) throw ConfigError("dirichlet_mixed_moment: dimension mismatch");
  Rational num = 1, A = 0;
  std::int64_t M = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] <= 0) throw ConfigError("dirichlet_mixed_moment: alphas must be positive");
    if (ms[i] < 0) throw ConfigError("dirichlet_mixed_moment: exponents must be non-negative");
    num *= rising(alphas[i], ms[i]);
    A += alphas[i];
    M += ms[i];
  }
  return num / rising(A, M);
}

Rational multinomial_factorial_moment(std::int64_t n, const std::vector<Rational>& ps,
                                      const std::vector<std::int64_t>& ms) {
  if (ps.size() != ms.size() || ps.empty()) throw ConfigError("multinomial_factorial_moment: dimension mismatch");
  if (n < 0) throw ConfigError("multinomial_factorial_moment: n must be non-negative");
  Rational sum = 0, prod = 1;
  std::int64_t M = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] < 0) throw ConfigError("multinomial_factorial_moment: negative probability");
    if (ms[i] < 0) throw ConfigError("multinomial_factorial_moment: exponents must be non-negative");
    sum += ps[i];
    for (std::int64_t j = 0; j < ms[i]; ++j) prod *= ps[i];
    M += ms[i];
  }
  if (sum != 1) throw ConfigError("multinomial_factorial_moment: probabilities must sum to 1");
  Rational falling = 1;
  for (std::int64_t j = 0; j < M; ++j) falling *= n - j;
  return falling * prod;
}

double shape_function(double z, const SamplingParam& t) {
  validate(t);
  const int k = t.k();
  double w = 0;
  for (int r = 0; r < 3; ++r) {
    const int tr = t[r];
    w += std::pow(z, tr) * std::pow(1 - z, k - tr - 1) / to_double(beta_exact({tr + 1, k - tr}));
  }
  return w;
}

bool CmtResult::within(double tol) const {
  return std::abs(to_double(first_moment) - 1) <= tol && std::abs(to_double(log_moment - entropy)) <= tol;
}

CmtResult cmt_verify(const SamplingParam& t) {
  validate(t);
  const std::int64_t k = t.k();
  CmtResult out;
  for (int r = 0; r < 3; ++r) {
    const std::int64_t tr = t[r];
    const Rational norm = beta_exact({tr + 1, k - tr});
    out.first_moment += beta_exact({tr + 2, k - tr}) / norm;
    out.log_moment += beta_ln(tr + 2, k - tr) / norm;
  }
  out.entropy = discrete_entropy(t);
  return out;
}

void validate_tau(const Tau& tau) {
  double s = 0;
  for (double x : tau) {
    if (!(x >= 0) || x > 1) throw ConfigError("tau components must lie in [0,1]");
    s += x;
  }
  if (std::abs(s - 1) > 1e-12) throw ConfigError("tau must sum to 1");
}

double continuous_entropy(const Tau& tau) {
  validate_tau(tau);
  double h = 0;
  for (double x : tau)
    if (x > 0) h -= x * std::log(x);
  return h;
}

double ContinuousCoeffs::a(CostMeasure m) const {
  switch (m) {
    case CostMeasure::comparisons: return a_C;
    case CostMeasure::swaps: return a_S;
    case CostMeasure::bytecodes: return a_B;
    case CostMeasure::scanned: return a_SE;
  }
  return a_C;
}

double ContinuousCoeffs::ratio(CostMeasure m) const {
  const double x = a(m);
  if (H > 0) return x / H;
  return x == 0 ? 0.0 : std::numeric_limits<double>::infinity();
}

ContinuousCoeffs continuous_coefficients(const Tau& tau) {
  const double t1 = tau[0], t2 = tau[1], t3 = tau[2];
  ContinuousCoeffs c;
  c.H = continuous_entropy(tau);
  c.a_C = 1 + t2 + (2 * t1 + t2) * t3;
  c.a_S = t1 + (t1 + t2) * t3;
  c.a_B = 10 + 13 * t1 + 5 * t2 + (t1 + t2) * (t1 + 11 * t3);
  c.a_SE = 1 + t1;
  return c;
}

MuFit fit_mu(double bc_a, double se_a, double bc_b, double se_b, double target_ratio) {
  if (!(target_ratio > 0)) throw ConfigError("fit_mu: target ratio must be positive");
  if (bc_a < 0 || se_a < 0 || bc_b < 0 || se_b < 0) throw ConfigError("fit_mu: costs must be non-negative");
  const double num = bc_a - target_ratio * bc_b;
  const double den = (bc_a - se_a) - target_ratio * (bc_b - se_b);
  const double eps = 1e-12 * (std::abs(bc_a) + std::abs(bc_b) + std::abs(se_a) + std::abs(se_b) + 1);
  MuFit fit;
  if (std::abs(den) <= eps) {
    if (std::abs(num) <= eps) {
      fit.underdetermined = true;
      return fit;
    }
    throw ConfigError("fit_mu: no solution for these cost pairs");
  }
  fit.mu = num / den;
  fit.in_unit_interval = fit.mu >= 0 && fit.mu <= 1;
  return fit;
}

}  // namespace dpqs
