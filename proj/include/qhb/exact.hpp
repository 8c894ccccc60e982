#pragma once

// Exact scalar arithmetic used throughout the library.
//
// Integers and rationals are GMP values. Every rational produced by gmpxx
// arithmetic is kept in lowest terms with a positive denominator; values
// parsed from text are canonicalized before they are returned.

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhb {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(a, b), zero whenever b < 0, b > a or a < 0.
inline Integer binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

inline Integer ipow(const Integer& base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

inline Integer ipow(long base, std::int64_t exp) { return ipow(Integer(base), exp); }

/// base^exp for any integer exponent; negative exponents give 1/base^|exp|.
inline Rational rpow(long base, std::int64_t exp) {
  if (exp >= 0) return Rational(ipow(base, exp));
  if (base == 0) throw std::domain_error("rpow: zero to a negative power");
  Rational r(Integer(1), ipow(base, -exp));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// "p/q" in lowest terms, or a bare integer when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "p/q" or a decimal integer (optional leading '-').
inline Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern))
    throw std::invalid_argument("not a rational number: '" + s + "'");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

/// Decimal rendering for display only; never fed back into computations.
inline std::string approx_string(const Rational& q, int digits = 10) {
  mpf_class f(0, 256);
  f = q;
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<size_t>(digits));
  if (mant.empty()) return "0";
  bool neg = mant.front() == '-';
  if (neg) mant.erase(0, 1);
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else if (static_cast<size_t>(exp) >= mant.size()) {
    if (static_cast<size_t>(exp) > static_cast<size_t>(digits) + 6) {
      // Large magnitudes: scientific notation.
      out = mant.substr(0, 1);
      if (mant.size() > 1) out += "." + mant.substr(1);
      out += "e+" + std::to_string(exp - 1);
    } else {
      out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
    }
  } else {
    out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
  }
  return neg ? "-" + out : out;
}

}  // namespace qhb
