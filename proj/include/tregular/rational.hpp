#pragma once

// Exact scalars for the symbolic tier: arbitrary-precision rationals plus
// the handful of combinatorial helpers (factorials, generalized binomials,
// exact square roots) that the rest of the library leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tregular {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw std::invalid_argument("bad rational literal: " + text);
  }
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

/// base^e for integer e of either sign; base must be nonzero when e < 0.
inline Rational rat_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
    Rational inv = Rational(denominator(base), numerator(base));
    return rat_pow(inv, -e);
  }
  Rational acc(1), b = base;
  int n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline Integer factorial(unsigned n) {
  Integer acc(1);
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= Integer(n - i);
    acc /= Integer(i + 1);
  }
  return acc;
}

/// Generalized binomial coefficient (top choose k) = top(top-1)...(top-k+1)/k!
/// for rational top, as used by hypergeometric-style expansions.
inline Rational binomial_rational(const Rational& top, unsigned k) {
  Rational acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= (top - Rational(i));
    acc /= Rational(i + 1);
  }
  return acc;
}

/// Exact square root if the argument is the square of a rational,
/// std::nullopt otherwise. Negative input never has one.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  const Integer num = numerator(r), den = denominator(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace tregular
