#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chisq {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational always keeps the canonical reduced
/// form with a positive denominator, so == is structural equality.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace chisq
