#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>

#include "dpqs/theory.hpp"
#include "oracles.hpp"

using namespace dpqs;

TEST_CASE("harmonic numbers and entropy") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(4) == frac(25, 12));
  CHECK_THROWS_AS(harmonic(-1), ConfigError);
  CHECK(discrete_entropy(SamplingParam{0, 0, 0}) == frac(5, 6));
  CHECK(discrete_entropy(CqsSamplingParam{0, 0}) == frac(1, 2));
  // symmetric in the three components
  CHECK(discrete_entropy(SamplingParam{3, 1, 0}) == discrete_entropy(SamplingParam{0, 3, 1}));
}

TEST_CASE("no-sampling coefficient ratios") {
  const auto y = yqs_coefficients({0, 0, 0});
  CHECK(y.ratio(CostMeasure::comparisons) == frac(19, 10));
  CHECK(y.ratio(CostMeasure::swaps) == frac(3, 5));
  CHECK(y.ratio(CostMeasure::bytecodes) == frac(217, 10));
  CHECK(y.ratio(CostMeasure::scanned) == frac(8, 5));
  const auto c = cqs_coefficients({0, 0});
  CHECK(c.ratio(CostMeasure::comparisons) == 2);
  CHECK(c.ratio(CostMeasure::swaps) == frac(1, 3));
  CHECK(c.ratio(CostMeasure::bytecodes) == 18);
  CHECK(c.ratio(CostMeasure::scanned) == 2);
}

TEST_CASE("tertiles of five") {
  const auto y = yqs_coefficients({1, 1, 1});
  CHECK(y.ratio(CostMeasure::comparisons) == frac(680, 399));
  CHECK(y.ratio(CostMeasure::scanned) == frac(80, 57));
  CHECK(std::abs(y.ratio_d(CostMeasure::swaps) - 0.5514) < 0.5e-4);
  CHECK(std::abs(y.ratio_d(CostMeasure::bytecodes) - 19.2982) < 0.5e-4);
}

TEST_CASE("partition expectations for three elements without sampling") {
  const auto e = partition_expectations({0, 0, 0}, 3);
  CHECK(e.T_C == frac(7, 3));
  CHECK(e.T_S == frac(2, 3));
  CHECK(e.T_SE == frac(5, 3));
  CHECK(e.T_BC == frac(109, 3));
  const auto all = partition_expectations({1, 1, 1}, 5);
  CHECK(all.T_C == 0);
  CHECK(all.T_SE == 0);
  CHECK(all.T_BC == 50);
  CHECK_THROWS_AS(partition_expectations({1, 1, 1}, 4), ConfigError);
}

TEST_CASE("partition expectations equal the permutation-average oracle") {
  for (long n = 2; n <= 8; ++n) {
    for (int t1 = 0; t1 <= 3; ++t1)
      for (int t2 = 0; t2 <= 3; ++t2)
        for (int t3 = 0; t3 <= 3; ++t3) {
          const SamplingParam t{t1, t2, t3};
          if (t.k() > n || t.k() > 6) continue;
          const auto o = oracle::first_step_average(t, n);
          const auto e = partition_expectations(t, n);
          INFO("t=(" << t1 << "," << t2 << "," << t3 << ") n=" << n);
          CHECK(o.comparisons == e.T_C);
          CHECK(o.swaps == e.T_S);
          CHECK(o.scanned == e.T_SE);
          CHECK(o.I1 == e.I1);
          CHECK(o.I2 == e.I2);
          CHECK(o.I3 == e.I3);
          CHECK(o.delta == e.delta);
          CHECK(o.s_at_Kprime == e.s_at_Kprime);
        }
  }
}

TEST_CASE("subproblem distribution equals pivot-rank enumeration") {
  for (long n = 2; n <= 16; ++n)
    for (int t1 = 0; t1 <= 2; ++t1)
      for (int t2 = 0; t2 <= 2; ++t2)
        for (int t3 = 0; t3 <= 2; ++t3) {
          const SamplingParam t{t1, t2, t3};
          if (t.k() > n) continue;
          for (int r = 1; r <= 3; ++r) {
            const auto got = subproblem_pmf(r, n, t);
            const auto want = oracle::subproblem_pmf(r, n, t);
            REQUIRE(got.size() == want.size());
            Rational sum = 0;
            for (std::size_t j = 0; j < got.size(); ++j) {
              REQUIRE(got[j] == want[j]);
              sum += got[j];
            }
            REQUIRE(sum == 1);
          }
        }
  CHECK_THROWS_AS(subproblem_pmf(0, 5, {0, 0, 0}), ConfigError);
}

TEST_CASE("beta functions") {
  CHECK(beta_exact({2, 3}) == frac(1, 12));
  CHECK(beta_exact({1, 1, 1}) == frac(1, 2));
  CHECK(beta_ln(1, 1) == 1);
  CHECK(beta_ln(1, 2) == frac(3, 4));
  CHECK(beta_ln(2, 1) == frac(1, 4));
  CHECK_THROWS_AS(beta_ln(2, 0), ConfigError);
  CHECK(beta_fn({2.5, 1.5}) == doctest::Approx(std::exp(std::lgamma(2.5) + std::lgamma(1.5) - std::lgamma(4.0))));
  CHECK(beta_fn({3, 4}) == doctest::Approx(1.0 / 60));
  CHECK_THROWS_AS(beta_fn({0.0, 1.0}), ConfigError);
  boost::math::quadrature::tanh_sinh<double> ts;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      auto f = [&](double x) { return -std::pow(x, a - 1) * std::pow(1 - x, b - 1) * std::log(x); };
      const double q = ts.integrate(f, 0.0, 1.0);
      CHECK(to_double(beta_ln(a, b)) == doctest::Approx(q).epsilon(1e-10));
    }
}

TEST_CASE("dirichlet and multinomial moments") {
  // E[X^m1 (1-X)^m2] for X ~ Beta(a, b) is B(a+m1, b+m2) / B(a, b)
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2)
          CHECK(dirichlet_mixed_moment({Rational(a), Rational(b)}, {m1, m2}) ==
                beta_exact({a + m1, b + m2}) / beta_exact({a, b}));
  const std::vector<Rational> ps{frac(1, 2), frac(1, 3), frac(1, 6)};
  const int n = 5;
  for (int m1 = 0; m1 <= 2; ++m1)
    for (int m2 = 0; m2 <= 2; ++m2) {
      // enumerate all 3^n outcomes
      Rational expect = 0;
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        int x[3] = {0, 0, 0}, c = code;
        Rational pr = 1;
        for (int i = 0; i < n; ++i, c /= 3) {
          ++x[c % 3];
          pr *= ps[static_cast<std::size_t>(c % 3)];
        }
        Rational f = 1;
        for (int j = 0; j < m1; ++j) f *= x[0] - j;
        for (int j = 0; j < m2; ++j) f *= x[1] - j;
        expect += pr * f;
      }
      CHECK(multinomial_factorial_moment(n, ps, {m1, m2, 0}) == expect);
    }
  CHECK_THROWS_AS(multinomial_factorial_moment(3, {frac(1, 2), frac(1, 3)}, {1, 1}), ConfigError);
}

TEST_CASE("shape function integrals") {
  using boost::math::quadrature::gauss_kronrod;
  for (const SamplingParam t : {SamplingParam{0, 0, 0}, SamplingParam{1, 1, 1}, SamplingParam{0, 2, 5}}) {
    auto w = [&](double z) { return shape_function(z, t); };
    auto zw = [&](double z) { return z * shape_function(z, t); };
    CHECK(gauss_kronrod<double, 61>::integrate(w, 0.0, 1.0) == doctest::Approx(3.0));
    CHECK(gauss_kronrod<double, 61>::integrate(zw, 0.0, 1.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("continuous master theorem ingredients are exact") {
  CHECK(cmt_verify({1, 1, 1}).log_moment == frac(19, 20));
  for (int t1 = 0; t1 <= 8; ++t1)
    for (int t2 = 0; t1 + t2 <= 8; ++t2)
      for (int t3 = 0; t1 + t2 + t3 <= 8; ++t3) {
        const auto r = cmt_verify({t1, t2, t3});
        REQUIRE(r.exact_match());
        REQUIRE(r.within(1e-12));
      }
}

TEST_CASE("leading term and its truncation") {
  const double n = std::exp(1.0) * 46;
  CHECK(leading_term(1.5, n, 46.0) == doctest::Approx(1.5 * n));
  CHECK(leading_term(1.5, 1e6, 46.0) ==
        doctest::Approx(leading_term(1.5, 1e6) * (1 - std::log(46.0) / std::log(1e6))));
  CHECK_THROWS_AS(leading_term(1.0, 10, 20.0), ConfigError);
}

TEST_CASE("continuous coefficients are the limit of large symmetric samples") {
  const auto big = yqs_coefficients({400, 400, 400});
  const auto c = continuous_coefficients({1.0 / 3, 1.0 / 3, 1.0 / 3});
  for (CostMeasure m : kCostMeasures) CHECK(big.ratio_d(m) == doctest::Approx(c.ratio(m)).epsilon(5e-3));
  CHECK(continuous_entropy({1.0, 0.0, 0.0}) == 0.0);
  CHECK(continuous_coefficients({0, 0, 1}).ratio(CostMeasure::swaps) == 0.0);
  CHECK(std::isinf(continuous_coefficients({0, 0, 1}).ratio(CostMeasure::comparisons)));
  CHECK_THROWS_AS(validate_tau({0.5, 0.6, 0.0}), ConfigError);
  CHECK_THROWS_AS(validate_tau({-0.1, 0.6, 0.5}), ConfigError);
}

TEST_CASE("mixing weight fit on the classic vs dual-pivot costs") {
  // leading terms only: 18 - 16 mu = 1.1 (21.7 - 20.1 mu)
  CHECK(fit_mu(18, 2, 21.7, 1.6, 1.1).mu == doctest::Approx(5.87 / 6.11));
  // scanned elements with linear terms at n = 10^6, bytecodes leading term only
  const double ln = std::log(1e6);
  const auto fit = fit_mu(18 * ln, 2 * ln - 2.3045, 21.7 * ln, 1.6 * ln - 2.2425, 1.1);
  CHECK(fit.mu >= 0.93);
  CHECK(fit.mu <= 0.96);
}

TEST_CASE("mixing weight fit") {
  // q_a = (1-mu) bc_a + mu se_a, q_b likewise
  const double bc_a = 18, se_a = 2, bc_b = 21.7, se_b = 1.6, mu = 0.3;
  const double target = ((1 - mu) * bc_a + mu * se_a) / ((1 - mu) * bc_b + mu * se_b);
  const auto fit = fit_mu(bc_a, se_a, bc_b, se_b, target);
  CHECK(fit.mu == doctest::Approx(mu));
  CHECK(fit.in_unit_interval);
  CHECK(fit_mu(1, 1, 1, 1, 1).underdetermined);
  CHECK_THROWS_AS(fit_mu(1, 1, 1, 1, 2), ConfigError);
  const auto out = fit_mu(bc_a, se_a, bc_b, se_b, 5.0);
  CHECK_FALSE(out.in_unit_interval);
  CHECK((out.clamped() == 0.0 || out.clamped() == 1.0));
}

TEST_CASE("measure names") {
  for (CostMeasure m : kCostMeasures) CHECK(parse_cost_measure(to_string(m)) == m);
  CHECK_THROWS_AS(parse_cost_measure("time"), ConfigError);
}
