#pragma once

#include "dicelab/stats.hpp"

namespace dicelab {

// The single-die weight-generating function: value -> summed face weight.
struct WeightPolynomial {
  std::map<long long, BigInt> coefficients;

  static WeightPolynomial from_die(const DieSpec &die);
  WeightPolynomial convolve(const WeightPolynomial &other) const;
};

// Distribution of the sum of d rolls, via d-1 convolutions. No enumeration
// cap applies: cost is O(d^2 * value range), not |faces|^d.
Distribution sum_pmf_convolution(const DieSpec &die, unsigned d);

// The enumeration oracle: identical contract to stats::pmf(space, "sum").
Distribution sum_pmf_enumeration(const SampleSpace &space,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct ComparePathsReport {
  bool checked = false;         // false when enumeration was refused by the cap
  bool equal = false;           // exact equality on every support point
  std::size_t support_points = 0;
  std::vector<long long> mismatched_values;
  double convolution_seconds = 0;
  double enumeration_seconds = 0;
};

ComparePathsReport compare_paths(const DieSpec &die, unsigned d,
                                 std::uint64_t cap = kDefaultEnumerationCap);

} // namespace dicelab
