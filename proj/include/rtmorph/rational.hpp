#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rtmorph {

/// Exact rational coordinate. Every geometric predicate in the library is
/// decided on these; decimals only appear in rendered SVG.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading '-'); the result is canonicalized.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-term "p/q" with q > 0 and the sign carried by p. Integers keep the
/// "/1" suffix so every serialized value has the same shape.
std::string format_rational(const Rational& value);

/// Decimal rendering with `digits` significant digits (SVG output only).
std::string format_decimal(const Rational& value, int digits = 9);

/// p / q in canonical form (the two-argument mpq constructor skips this).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

}  // namespace rtmorph
