#pragma once

// Exact integer and rational scalars shared by every module. Nothing in the
// library uses floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace regent {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Floor division, rounding toward negative infinity (b != 0).
Int floor_div(const Int& a, const Int& b);
/// Remainder in [0, |b|).
Int mod_floor(const Int& a, const Int& b);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
Int parse_int(std::string_view text);
/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument on zero q or junk.
Rational parse_rational(std::string_view text);

std::string to_string(const Int& v);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace regent
