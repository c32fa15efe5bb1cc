#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace diamondlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders as "p/q" in lowest terms; integers keep the "/1" suffix.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// num/den, except that a zero numerator yields 0 even when den == 0.
/// Throws BadDimensions for a nonzero numerator over a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

Rational max(const Rational& a, const Rational& b);

}  // namespace diamondlab
