#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the handful of
// combinatorial helpers every other header needs.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace staircase {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

inline Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer power(long base, unsigned long exponent) {
  return power(Integer(base), exponent);
}

inline Rational power(const Rational& base, unsigned long exponent) {
  Rational out(power(base.get_num(), exponent), power(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

/// 4^n * n!, the number of staircase tableaux of size n.
inline Integer tableau_count(unsigned long n) {
  return power(4L, n) * factorial(n);
}

/// 2^n * n!, the common denominator of the diagonal laws.
inline Integer signed_permutation_count(unsigned long n) {
  return power(2L, n) * factorial(n);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Numerator/denominator string pair; the serialized form of exact values.
inline std::pair<std::string, std::string> to_fraction_strings(const Rational& v) {
  return {v.get_num().get_str(), v.get_den().get_str()};
}

/// Parses "p", "p/q" or a finite decimal like "0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational out;
    if (out.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    out.canonicalize();
    if (out.get_den() == 0) throw std::invalid_argument("bad rational: " + text);
    return out;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const auto scale = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad rational: " + text);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+'))))
      throw std::invalid_argument("bad rational: " + text);
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return make_rational(Integer(digits), power(10L, scale));
}

inline double to_double(const Rational& v) { return v.get_d(); }

}  // namespace staircase
