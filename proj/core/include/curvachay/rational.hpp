#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace curvachay {

// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
// denominator) through arithmetic; the helpers below canonicalize on
// construction from raw numerator/denominator pairs.
using Rational = mpq_class;

Rational rat(long numerator, long denominator = 1);

/// Renders "p/q", or just "p" for integers.
std::string to_fraction_string(const Rational& q);

/// Parses "p", "p/q" or a decimal-free signed integer pair.
Rational rational_from_string(std::string_view text);

double to_double(const Rational& q);

/// Exact sum of a vector.
Rational rational_sum(const std::vector<Rational>& values);

}  // namespace curvachay
