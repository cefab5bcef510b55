#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gfrob {

/// Exact rationals over arbitrary-precision integers. mpq_class keeps
/// values canonical (lowest terms, positive denominator) after every
/// arithmetic operation.
using Rational = mpq_class;

/// Canonical "p/q" form; the denominator is always written, so 3 is "3/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace gfrob
