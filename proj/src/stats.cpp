#include "dicelab/stats.hpp"

#include <limits>

#include "dicelab/errors.hpp"

namespace dicelab {

Rational Distribution::mean() const {
  Rational m = 0;
  for (const auto &[v, p] : mass)
    m += p * v;
  return m;
}

Rational Distribution::variance() const {
  Rational m = mean();
  Rational sq = 0;
  for (const auto &[v, p] : mass)
    sq += p * v * v;
  return sq - m * m;
}

namespace {

bool unit_weights(const DieSpec &die) {
  for (const Face &f : die.faces())
    if (f.weight != 1)
      return false;
  return true;
}

// Streams outcomes with their weights. Weights stay in u64 whenever the
// denominator fits (every outcome weight is bounded by it).
template <class Fn>
void scan_weighted(const SampleSpace &space, std::uint64_t cap, Fn &&fn) {
  const DieSpec &die = space.die();
  if (unit_weights(die)) {
    for_each_outcome(space, [&](const Outcome &o) { fn(o, 1ULL); }, cap);
  } else if (space.denominator() <=
             BigInt(std::numeric_limits<unsigned long long>::max())) {
    for_each_outcome(
        space,
        [&](const Outcome &o) {
          unsigned long long w = 1;
          for (std::uint32_t i : o.indices)
            w *= die.faces()[i].weight;
          fn(o, w);
        },
        cap);
  } else {
    for_each_outcome(
        space, [&](const Outcome &o) { fn(o, space.outcome_weight(o)); }, cap);
  }
}

} // namespace

Probability probability(const SampleSpace &space, const Expr &event, std::uint64_t cap) {
  BigInt favorable_weight = 0;
  scan_weighted(space, cap, [&](const Outcome &o, const auto &w) {
    if (eval_bool(event, EvalContext{space, o}))
      favorable_weight += w;
  });
  return Probability{Rational(favorable_weight, space.denominator()),
                     favorable_weight, space.denominator()};
}

std::vector<Outcome> favorable(const SampleSpace &space, const Expr &event,
                               std::uint64_t listing_cap, std::uint64_t cap) {
  std::vector<Outcome> result;
  for_each_outcome(
      space,
      [&](const Outcome &o) {
        if (eval_bool(event, EvalContext{space, o})) {
          if (result.size() >= listing_cap)
            throw CapExceededError("favorable listing exceeds cap of " +
                                   std::to_string(listing_cap) + " outcomes");
          result.push_back(o);
        }
      },
      cap);
  return result;
}

Rational expectation(const SampleSpace &space, const Expr &rv, std::uint64_t cap) {
  BigInt weighted_sum = 0;
  scan_weighted(space, cap, [&](const Outcome &o, const auto &w) {
    weighted_sum += BigInt(w) * eval_int(rv, EvalContext{space, o});
  });
  return Rational(weighted_sum, space.denominator());
}

Rational variance_definitional(const SampleSpace &space, const Expr &rv,
                               std::uint64_t cap) {
  // Pass 1: the mean, as num/den.
  Rational mean = expectation(space, rv, cap);
  BigInt num = numerator(mean);
  BigInt den = denominator(mean);
  // Pass 2: Σ w (x - num/den)^2 = Σ w (x·den - num)^2 / den^2.
  BigInt devsq = 0;
  scan_weighted(space, cap, [&](const Outcome &o, const auto &w) {
    BigInt dev = BigInt(eval_int(rv, EvalContext{space, o})) * den - num;
    devsq += BigInt(w) * dev * dev;
  });
  return Rational(devsq, den * den * space.denominator());
}

Rational variance_moments(const SampleSpace &space, const Expr &rv, std::uint64_t cap) {
  BigInt sum = 0, sum_sq = 0;
  scan_weighted(space, cap, [&](const Outcome &o, const auto &w) {
    BigInt x = eval_int(rv, EvalContext{space, o});
    sum += BigInt(w) * x;
    sum_sq += BigInt(w) * x * x;
  });
  Rational ex(sum, space.denominator());
  Rational ex2(sum_sq, space.denominator());
  return ex2 - ex * ex;
}

Distribution pmf(const SampleSpace &space, const Expr &rv, std::uint64_t cap) {
  std::map<long long, BigInt> weights;
  scan_weighted(space, cap, [&](const Outcome &o, const auto &w) {
    weights[eval_int(rv, EvalContext{space, o})] += w;
  });
  Distribution dist;
  dist.support_min = weights.begin()->first;
  dist.support_max = weights.rbegin()->first;
  for (const auto &[v, w] : weights)
    dist.mass.emplace(v, Rational(w, space.denominator()));
  return dist;
}

std::vector<std::pair<long long, Rational>> cdf(const Distribution &dist,
                                                CdfConvention convention) {
  std::vector<std::pair<long long, Rational>> result;
  result.reserve(dist.mass.size());
  Rational running = 0;
  for (const auto &[v, p] : dist.mass) {
    if (convention == CdfConvention::StrictBelow) {
      result.emplace_back(v, running);
      running += p;
    } else {
      running += p;
      result.emplace_back(v, running);
    }
  }
  return result;
}

} // namespace dicelab
