#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dicelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational &r) { return r.convert_to<double>(); }
inline double to_double(const BigInt &n) { return n.convert_to<double>(); }

// BigInt power with nonnegative exponent.
BigInt ipow(const BigInt &base, unsigned exp);

// Renders a rational as a decimal with `significant` significant digits,
// round-half-even, trailing zeros stripped. Integers render without a point.
std::string format_decimal(const Rational &r, int significant = 10);

// "p/q" (canonical reduced form), or just "p" when q == 1.
std::string format_rational(const Rational &r);

} // namespace dicelab
