#include "dicelab/rational.hpp"

#include <cassert>

namespace dicelab {

BigInt ipow(const BigInt &base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u)
      result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

namespace {

// floor(num/den) rounded half to even.
BigInt div_round_half_even(const BigInt &num, const BigInt &den) {
  BigInt q = num / den;
  BigInt r = num - q * den;
  BigInt twice = 2 * r;
  if (twice > den || (twice == den && (q & 1) != 0))
    ++q;
  return q;
}

} // namespace

std::string format_rational(const Rational &r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1)
    s += "/" + denominator(r).str();
  return s;
}

std::string format_decimal(const Rational &r, int significant) {
  assert(significant >= 1);
  if (r == 0)
    return "0";
  std::string sign;
  Rational v = r;
  if (v < 0) {
    sign = "-";
    v = -v;
  }
  BigInt n = numerator(v);
  BigInt d = denominator(v);
  if (d == 1)
    return sign + n.str();

  // Decimal exponent of the leading digit: e = floor(log10(n/d)).
  long long e;
  if (n >= d) {
    e = static_cast<long long>(BigInt(n / d).str().size()) - 1;
  } else {
    e = 0;
    BigInt scaled = n;
    while (scaled < d) {
      scaled *= 10;
      --e;
    }
  }

  // Round to `significant` digits.
  long long shift = significant - 1 - e;
  BigInt digits = shift >= 0
                      ? div_round_half_even(n * ipow(10, static_cast<unsigned>(shift)), d)
                      : div_round_half_even(n, d * ipow(10, static_cast<unsigned>(-shift)));
  std::string ds = digits.str();
  if (static_cast<int>(ds.size()) > significant) {
    // Rounding carried into a new leading digit (e.g. 0.99995 -> 1.000).
    ++e;
    ds.pop_back();
  }

  std::string out;
  if (e >= significant - 1) {
    out = ds + std::string(static_cast<std::size_t>(e - significant + 1), '0');
  } else if (e >= 0) {
    out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          ds.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0')
      out.pop_back();
    if (out.back() == '.')
      out.pop_back();
  }
  return sign + out;
}

} // namespace dicelab
