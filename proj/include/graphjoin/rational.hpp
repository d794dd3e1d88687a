#pragma once

#include <gmpxx.h>

#include <string>

namespace graphjoin {

// Exact rational arithmetic via GMP. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as they are built through
// arithmetic or the helpers below.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// Accepts "p/q" or "p" with optional sign; throws Error(ParseError) on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

}  // namespace graphjoin
