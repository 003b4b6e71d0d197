#include "dicelab/sumdist.hpp"

#include <chrono>
#include <limits>

#include "dicelab/errors.hpp"

namespace dicelab {

WeightPolynomial WeightPolynomial::from_die(const DieSpec &die) {
  WeightPolynomial poly;
  for (const Face &f : die.faces())
    if (f.weight > 0)
      poly.coefficients[f.value] += f.weight;
  return poly;
}

WeightPolynomial WeightPolynomial::convolve(const WeightPolynomial &other) const {
  WeightPolynomial result;
  for (const auto &[va, wa] : coefficients)
    for (const auto &[vb, wb] : other.coefficients)
      result.coefficients[va + vb] += wa * wb;
  return result;
}

Distribution sum_pmf_convolution(const DieSpec &die, unsigned d) {
  if (d == 0)
    throw ValidationError("d: number of rolls must be at least 1");
  WeightPolynomial one = WeightPolynomial::from_die(die);
  WeightPolynomial acc = one;
  for (unsigned i = 2; i <= d; ++i)
    acc = acc.convolve(one);
  BigInt denominator = ipow(BigInt(die.total_weight()), d);
  Distribution dist;
  dist.support_min = acc.coefficients.begin()->first;
  dist.support_max = acc.coefficients.rbegin()->first;
  for (const auto &[v, w] : acc.coefficients)
    dist.mass.emplace(v, Rational(w, denominator));
  return dist;
}

namespace {

// Depth-first walk with running sum and weight, u64 throughout. Valid only
// when the denominator fits u64 (then every partial weight does too).
void enumerate_sums_u64(const DieSpec &die, unsigned d, unsigned depth,
                        long long sum, unsigned long long weight,
                        long long offset, std::vector<unsigned long long> &counts) {
  if (depth == d) {
    counts[static_cast<std::size_t>(sum - offset)] += weight;
    return;
  }
  for (const Face &f : die.faces())
    enumerate_sums_u64(die, d, depth + 1, sum + f.value, weight * f.weight,
                       offset, counts);
}

void enumerate_sums_big(const DieSpec &die, unsigned d, unsigned depth,
                        long long sum, const BigInt &weight,
                        std::map<long long, BigInt> &counts) {
  if (depth == d) {
    counts[sum] += weight;
    return;
  }
  for (const Face &f : die.faces())
    enumerate_sums_big(die, d, depth + 1, sum + f.value, weight * f.weight, counts);
}

} // namespace

Distribution sum_pmf_enumeration(const SampleSpace &space, std::uint64_t cap) {
  if (space.cardinality() > cap)
    throw CapExceededError(
        "enumeration refused: cardinality " + space.cardinality().str() +
        " exceeds cap " + std::to_string(cap) +
        "; use the convolution path instead");
  const DieSpec &die = space.die();
  const unsigned d = space.dice_count();
  Distribution dist;
  long long lo = static_cast<long long>(d) * die.min_value();
  long long hi = static_cast<long long>(d) * die.max_value();
  bool fits_u64 = space.denominator() <=
                  BigInt(std::numeric_limits<unsigned long long>::max());
  if (fits_u64 && hi - lo < 100'000'000LL) {
    std::vector<unsigned long long> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    enumerate_sums_u64(die, d, 0, 0, 1, lo, counts);
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] != 0)
        dist.mass.emplace(lo + static_cast<long long>(i),
                          Rational(BigInt(counts[i]), space.denominator()));
  } else {
    std::map<long long, BigInt> counts;
    enumerate_sums_big(die, d, 0, 0, 1, counts);
    for (const auto &[v, w] : counts)
      dist.mass.emplace(v, Rational(w, space.denominator()));
  }
  dist.support_min = dist.mass.begin()->first;
  dist.support_max = dist.mass.rbegin()->first;
  return dist;
}

ComparePathsReport compare_paths(const DieSpec &die, unsigned d, std::uint64_t cap) {
  using clock = std::chrono::steady_clock;
  ComparePathsReport report;

  auto t0 = clock::now();
  Distribution conv = sum_pmf_convolution(die, d);
  report.convolution_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  report.support_points = conv.mass.size();

  SampleSpace space(die, d);
  if (space.cardinality() > cap)
    return report; // unchecked: convolution-only verdict

  t0 = clock::now();
  Distribution enumerated = sum_pmf_enumeration(space, cap);
  report.enumeration_seconds = std::chrono::duration<double>(clock::now() - t0).count();

  report.checked = true;
  report.equal = true;
  for (const auto &[v, p] : conv.mass) {
    if (enumerated.mass_at(v) != p) {
      report.equal = false;
      report.mismatched_values.push_back(v);
    }
  }
  for (const auto &[v, p] : enumerated.mass) {
    if (conv.mass.find(v) == conv.mass.end()) {
      report.equal = false;
      report.mismatched_values.push_back(v);
    }
  }
  return report;
}

} // namespace dicelab
