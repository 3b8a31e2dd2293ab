#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace novikov {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num / den in lowest terms; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" or "p" in base 10, optional leading '-' or '+'. Nothing else is accepted.
/// Throws ParseError on bad syntax and ZeroDenominator when q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace novikov
