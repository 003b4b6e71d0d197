#include <doctest.h>

#include "dicelab/rational.hpp"

using namespace dicelab;

TEST_CASE("ipow") {
  CHECK(ipow(6, 10) == BigInt("60466176"));
  CHECK(ipow(10, 0) == 1);
  CHECK(ipow(2, 64) == BigInt("18446744073709551616"));
}

TEST_CASE("format_rational") {
  CHECK(format_rational(Rational(5, 2)) == "5/2");
  CHECK(format_rational(Rational(14)) == "14");
  CHECK(format_rational(Rational(56, 216)) == "7/27"); // canonical reduced form
}

TEST_CASE("format_decimal basic") {
  CHECK(format_decimal(Rational(0)) == "0");
  CHECK(format_decimal(Rational(14)) == "14");
  CHECK(format_decimal(Rational(5, 2)) == "2.5");
  CHECK(format_decimal(Rational(10, 32)) == "0.3125");
  CHECK(format_decimal(Rational(56, 216)) == "0.2592592593");
  CHECK(format_decimal(Rational(1, 1296)) == "0.0007716049383");
  CHECK(format_decimal(Rational(706, 1296)) == "0.5447530864");
  CHECK(format_decimal(Rational(-5, 4)) == "-1.25");
}

TEST_CASE("format_decimal rounding is half-even") {
  CHECK(format_decimal(Rational(1, 8), 2) == "0.12");
  CHECK(format_decimal(Rational(3, 8), 2) == "0.38");
  CHECK(format_decimal(Rational(125, 1000), 2) == "0.12");
}

TEST_CASE("format_decimal carry into a new leading digit") {
  CHECK(format_decimal(Rational(9999, 10000), 3) == "1");
  CHECK(format_decimal(Rational(99999, 100000), 4) == "1");
  CHECK(format_decimal(Rational(999, 1000), 5) == "0.999");
}

TEST_CASE("format_decimal keeps integers exact") {
  CHECK(format_decimal(Rational(BigInt("60466176"))) == "60466176");
  CHECK(format_decimal(Rational(BigInt("123456789012")), 5) == "123456789012");
}
