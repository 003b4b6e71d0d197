#pragma once

#include <map>
#include <vector>

#include "dicelab/dsl.hpp"
#include "dicelab/space.hpp"

namespace dicelab {

// An exact probability together with the unreduced favorable/total pair the
// counting produced (the CLI prints 56/216, not 7/27).
struct Probability {
  Rational value;      // canonical reduced rational in [0, 1]
  BigInt favorable;    // total weight of satisfying outcomes
  BigInt denominator;  // total_weight^d
};

// Exact PMF with tight support bounds.
struct Distribution {
  long long support_min = 0;
  long long support_max = 0;
  std::map<long long, Rational> mass;

  Rational mass_at(long long v) const {
    auto it = mass.find(v);
    return it == mass.end() ? Rational(0) : it->second;
  }
  Rational mean() const;
  Rational variance() const;
};

struct Moments {
  Rational mean;
  Rational variance;
};

enum class CdfConvention {
  Inclusive,   // F(h) = P(X <= h)
  StrictBelow, // F(h) = P(X < h), the prefix-sum form
};

constexpr std::uint64_t kDefaultListingCap = 100'000;

Probability probability(const SampleSpace &space, const Expr &event,
                        std::uint64_t cap = kDefaultEnumerationCap);

// All satisfying outcomes in lexicographic order.
std::vector<Outcome> favorable(const SampleSpace &space, const Expr &event,
                               std::uint64_t listing_cap = kDefaultListingCap,
                               std::uint64_t cap = kDefaultEnumerationCap);

Rational expectation(const SampleSpace &space, const Expr &rv,
                     std::uint64_t cap = kDefaultEnumerationCap);

// Two-pass: E(X) first, then the weighted mean of squared deviations.
Rational variance_definitional(const SampleSpace &space, const Expr &rv,
                               std::uint64_t cap = kDefaultEnumerationCap);

// Single-pass: E(X^2) - E(X)^2.
Rational variance_moments(const SampleSpace &space, const Expr &rv,
                          std::uint64_t cap = kDefaultEnumerationCap);

Distribution pmf(const SampleSpace &space, const Expr &rv,
                 std::uint64_t cap = kDefaultEnumerationCap);

// Running totals of the PMF over its support, under either convention.
std::vector<std::pair<long long, Rational>> cdf(const Distribution &dist,
                                                CdfConvention convention);

} // namespace dicelab
