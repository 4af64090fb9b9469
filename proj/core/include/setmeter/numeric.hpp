#pragma once

// Shared exact-arithmetic helpers: arbitrary-precision integers and rationals
// (Boost.Multiprecision) plus the few integer operations the counting
// calculus needs beyond what the backend provides directly.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace setmeter {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt floor_rational(const Rational& q);
BigInt ceil_rational(const Rational& q);

// floor(value / scale) and ceil(value / scale) without building the
// intermediate rational; scale > 0. The grid hot path.
BigInt floor_quotient(const Rational& value, const Rational& scale);
BigInt ceil_quotient(const Rational& value, const Rational& scale);

// Ceiling division, d > 0.
BigInt ceil_div(const BigInt& n, const BigInt& d);

// Largest r >= 0 with r^k <= n. Requires n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned long k);

// Natural log, stable for integers far beyond double range. Requires n >= 1.
double log_big(const BigInt& n);

// Natural log of a positive rational.
double log_rational(const Rational& q);

// Accepts integer ("7"), fraction ("3/4") and decimal ("-0.25") literals;
// decimals convert to exact rationals. Throws errc::parse_error otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_text(const Rational& q);

}  // namespace setmeter
