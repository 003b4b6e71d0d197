#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dicelab/rational.hpp"

namespace dicelab {

// One labeled face of a die or coin.
struct Face {
  std::string label;
  long long value = 0;
  unsigned long long weight = 1;
};

// A finite alphabet of faces. Immutable after construction.
class DieSpec {
public:
  static DieSpec make(std::vector<Face> faces);

  // Convenience alphabets.
  static DieSpec fair_die(int sides = 6);
  static DieSpec fair_coin(); // K (value 1) / Z (value 0)

  const std::vector<Face> &faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  unsigned long long total_weight() const { return total_weight_; }
  bool is_fair() const;

  long long min_value() const;
  long long max_value() const;

  // Exact mean and variance of the value of a single roll.
  Rational mean() const;
  Rational variance() const;

private:
  explicit DieSpec(std::vector<Face> faces);
  std::vector<Face> faces_;
  unsigned long long total_weight_ = 0;
};

// CLI die text: "1-6", "1:1,2:1,...,6:5" (value:weight pairs, weight
// optional), or "coin".
DieSpec parse_die_text(const std::string &text);

constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000'000ULL;

// One element of a power space: face indices (0-based internally, positions
// are 1-indexed on every user-facing surface).
struct Outcome {
  std::vector<std::uint32_t> indices;

  bool operator==(const Outcome &) const = default;
  auto operator<=>(const Outcome &) const = default;
};

// The d-fold Cartesian power of a die's face set. Construction never
// materializes outcomes.
class SampleSpace {
public:
  SampleSpace(DieSpec die, unsigned d);

  const DieSpec &die() const { return die_; }
  unsigned dice_count() const { return d_; }
  const BigInt &cardinality() const { return cardinality_; }
  const BigInt &denominator() const { return denominator_; }

  const Face &face_at(const Outcome &outcome, unsigned position_1based) const;
  long long value_at(const Outcome &outcome, unsigned position_1based) const;

  long long outcome_sum(const Outcome &outcome) const;
  BigInt outcome_weight(const Outcome &outcome) const;

  // "(1,3,6)" for dice, "(K,Z)" for labeled alphabets; uses labels.
  std::string render_outcome(const Outcome &outcome) const;

private:
  DieSpec die_;
  unsigned d_;
  BigInt cardinality_;
  BigInt denominator_;
};

SampleSpace power_space(const DieSpec &die, unsigned d);

// Streaming enumeration in lexicographic face-index order, one outcome at a
// time. The full space is never held in memory.
class OutcomeStream {
public:
  explicit OutcomeStream(const SampleSpace &space,
                         std::uint64_t cap = kDefaultEnumerationCap);

  // Returns the next outcome, or nullopt when exhausted. The referenced
  // Outcome is owned by the stream and overwritten by the next call.
  const Outcome *next();

private:
  const SampleSpace &space_;
  Outcome current_;
  bool exhausted_ = false;
  bool started_ = false;
};

// Applies fn to every outcome in lexicographic order. The Outcome reference
// is reused across calls.
void for_each_outcome(const SampleSpace &space,
                      const std::function<void(const Outcome &)> &fn,
                      std::uint64_t cap = kDefaultEnumerationCap);

} // namespace dicelab
