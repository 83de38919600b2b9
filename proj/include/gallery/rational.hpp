#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gallery/errors.hpp"

namespace gallery {

// Exact rational scalar. Kept canonical (reduced, denominator > 0) at all
// construction boundaries; gmp arithmetic preserves canonical form.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return abs(q); }

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Renders "num/den", omitting "/den" when the denominator is one.
inline std::string format_rat(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num" or "num/den" with optional leading minus on the numerator.
inline Rational parse_rat(const std::string& text) {
  if (text.empty()) throw FormatError("empty rational");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class whole(text);
      return Rational(whole);
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in '" + text + "'");
    return rat_from(num, den);
  } catch (const std::invalid_argument&) {
    throw FormatError("bad rational '" + text + "'");
  }
}

// Decimal rendering with enough digits to be unambiguous for rendering
// output. Exact integer long division, no floating point.
inline std::string rat_decimal(const Rational& q, int digits = 9) {
  mpz_class num = q.get_num();
  const mpz_class& den = q.get_den();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  mpz_class whole = num / den;
  mpz_class rem = num % den;
  out += whole.get_str();
  if (rem == 0) return out;
  out += '.';
  std::string frac;
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    mpz_class d = rem / den;
    rem %= den;
    frac += static_cast<char>('0' + d.get_si());
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.empty()) frac = "0";
  out += frac;
  return out;
}

}  // namespace gallery
