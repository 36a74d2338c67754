#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace dpqs {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational frac(std::int64_t num, std::int64_t den) { return Rational(num) / Rational(den); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

// Rising factorial x (x+1) ... (x+m-1).
inline Rational rising(const Rational& x, std::int64_t m) {
  Rational out = 1;
  for (std::int64_t i = 0; i < m; ++i) out *= x + i;
  return out;
}

inline BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

inline BigInt factorial(std::int64_t n) {
  BigInt out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace dpqs
