#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dpqs/rational.hpp"
#include "dpqs/sampling.hpp"

namespace dpqs {

enum class CostMeasure : std::uint8_t { comparisons, swaps, bytecodes, scanned };

inline constexpr std::array<CostMeasure, 4> kCostMeasures{CostMeasure::comparisons, CostMeasure::swaps,
                                                          CostMeasure::bytecodes, CostMeasure::scanned};

const char* to_string(CostMeasure m);
CostMeasure parse_cost_measure(std::string_view s);

Rational harmonic(std::int64_t n);

Rational discrete_entropy(const SamplingParam& t);
Rational discrete_entropy(const CqsSamplingParam& t);

struct CoeffSet {
  Rational a_C, a_S, a_BC, a_SE;
  Rational H;

  const Rational& a(CostMeasure m) const;
  Rational ratio(CostMeasure m) const { return a(m) / H; }
  double ratio_d(CostMeasure m) const { return to_double(ratio(m)); }
};

CoeffSet yqs_coefficients(const SamplingParam& t);
CoeffSet cqs_coefficients(const CqsSamplingParam& t);

// ratio * n ln n, or ratio * n ln(n / truncation).
double leading_term(double ratio, double n, std::optional<double> truncation = std::nullopt);

struct PartitionExpectation {
  Rational I1, I2, I3;
  Rational delta;
  Rational hyp_I3_I1;   // E[s@G]
  Rational hyp_I12_I3;  // E[l@K] - E[delta]
  Rational s_at_Kprime;
  Rational T_C, T_S, T_SE, T_BC;
};

PartitionExpectation partition_expectations(const SamplingParam& t, std::int64_t n);

// Index j runs over 0 .. n-k+t_r; entries below t_r are zero.
std::vector<Rational> subproblem_pmf(int r, std::int64_t n, const SamplingParam& t);

double beta_fn(const std::vector<double>& alphas);
Rational beta_exact(const std::vector<std::int64_t>& alphas);
Rational beta_ln(std::int64_t a1, std::int64_t a2);

Rational dirichlet_mixed_moment(const std::vector<Rational>& alphas, const std::vector<std::int64_t>& ms);
Rational multinomial_factorial_moment(std::int64_t n, const std::vector<Rational>& ps,
                                      const std::vector<std::int64_t>& ms);

double shape_function(double z, const SamplingParam& t);

struct CmtResult {
  Rational first_moment;
  Rational log_moment;
  Rational entropy;
  bool exact_match() const { return first_moment == 1 && log_moment == entropy; }
  bool within(double tol) const;
};

CmtResult cmt_verify(const SamplingParam& t);

using Tau = std::array<double, 3>;

void validate_tau(const Tau& tau);
double continuous_entropy(const Tau& tau);

struct ContinuousCoeffs {
  double a_C, a_S, a_B, a_SE;
  double H;
  double a(CostMeasure m) const;
  double ratio(CostMeasure m) const;
};

ContinuousCoeffs continuous_coefficients(const Tau& tau);

struct MuFit {
  double mu = 0;
  bool underdetermined = false;
  bool in_unit_interval = true;
  double clamped() const { return mu < 0 ? 0 : (mu > 1 ? 1 : mu); }
};

// Solves ((1-mu) bc_a + mu se_a) / ((1-mu) bc_b + mu se_b) = target_ratio.
MuFit fit_mu(double bc_a, double se_a, double bc_b, double se_b, double target_ratio);

}  // namespace dpqs
