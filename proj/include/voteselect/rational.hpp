#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace voteselect {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational over arbitrary-precision integers. Always normalized:
// lowest terms, denominator positive.
using Rational = boost::multiprecision::cpp_rational;

// Parses "2", "3/2" or "0.75" (optionally signed) into an exact rational.
// Throws ParseError on anything else.
Rational parse_ratio(const std::string& text);

// Canonical rendering: "n" when the denominator is 1, else "n/d".
std::string format_ratio(const Rational& r);

double ratio_to_double(const Rational& r);

// floor/ceil for rationals that fit a long once rounded.
long floor_to_long(const Rational& r);
long ceil_to_long(const Rational& r);

} // namespace voteselect
