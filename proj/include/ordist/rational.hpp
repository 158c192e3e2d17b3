#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ordist {

/// Exact rational number. Always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

/// Parses an integer ("-3"), a fraction ("3/6") or a finite decimal ("1.25", "-.5", "2e-3")
/// into an exact, canonical rational. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// "n" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

}  // namespace ordist
