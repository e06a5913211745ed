#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pcp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses a non-negative arc weight: either a decimal ("7", "0.25") or a
// fraction "p/q" with q > 0. Throws InputError on anything else.
Rational parse_weight(const std::string& text);

// Canonical text form: a plain decimal when the reduced denominator is
// 2^a * 5^b (no trailing zeros), otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

}  // namespace pcp
