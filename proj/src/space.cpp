#include "dicelab/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dicelab/errors.hpp"

namespace dicelab {

DieSpec::DieSpec(std::vector<Face> faces) : faces_(std::move(faces)) {
  for (const Face &f : faces_)
    total_weight_ += f.weight;
}

DieSpec DieSpec::make(std::vector<Face> faces) {
  if (faces.empty())
    throw ValidationError("faces: at least one face is required");
  std::set<std::string> seen;
  unsigned long long total = 0;
  for (const Face &f : faces) {
    if (!seen.insert(f.label).second)
      throw ValidationError("label: duplicate face label '" + f.label + "'");
    total += f.weight;
  }
  if (total == 0)
    throw ValidationError("weight: all face weights are zero");
  return DieSpec(std::move(faces));
}

DieSpec DieSpec::fair_die(int sides) {
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(sides));
  for (int v = 1; v <= sides; ++v)
    faces.push_back({std::to_string(v), v, 1});
  return make(std::move(faces));
}

DieSpec DieSpec::fair_coin() {
  return make({{"K", 1, 1}, {"Z", 0, 1}});
}

bool DieSpec::is_fair() const {
  return std::all_of(faces_.begin(), faces_.end(),
                     [&](const Face &f) { return f.weight == faces_.front().weight; });
}

long long DieSpec::min_value() const {
  long long m = faces_.front().value;
  for (const Face &f : faces_)
    if (f.weight > 0)
      m = std::min(m, f.value);
  return m;
}

long long DieSpec::max_value() const {
  long long m = faces_.front().value;
  for (const Face &f : faces_)
    if (f.weight > 0)
      m = std::max(m, f.value);
  return m;
}

Rational DieSpec::mean() const {
  Rational sum = 0;
  for (const Face &f : faces_)
    sum += Rational(BigInt(f.weight) * f.value);
  return sum / Rational(total_weight_);
}

Rational DieSpec::variance() const {
  Rational m = mean();
  Rational sq = 0;
  for (const Face &f : faces_)
    sq += Rational(BigInt(f.weight) * f.value * f.value);
  return sq / Rational(total_weight_) - m * m;
}

DieSpec parse_die_text(const std::string &text) {
  if (text == "coin")
    return DieSpec::fair_coin();
  auto dash = text.find('-');
  if (dash != std::string::npos && text.find(',') == std::string::npos &&
      text.find(':') == std::string::npos) {
    long long lo, hi;
    try {
      lo = std::stoll(text.substr(0, dash));
      hi = std::stoll(text.substr(dash + 1));
    } catch (const std::exception &) {
      throw ValidationError("faces: bad range '" + text + "'");
    }
    if (lo > hi)
      throw ValidationError("faces: empty range '" + text + "'");
    std::vector<Face> faces;
    for (long long v = lo; v <= hi; ++v)
      faces.push_back({std::to_string(v), v, 1});
    return DieSpec::make(std::move(faces));
  }
  // value:weight list
  std::vector<Face> faces;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      throw ValidationError("faces: empty entry in '" + text + "'");
    auto colon = item.find(':');
    try {
      long long value = std::stoll(colon == std::string::npos ? item : item.substr(0, colon));
      unsigned long long weight =
          colon == std::string::npos ? 1 : std::stoull(item.substr(colon + 1));
      faces.push_back({std::to_string(value), value, weight});
    } catch (const ValidationError &) {
      throw;
    } catch (const std::exception &) {
      throw ValidationError("faces: bad entry '" + item + "'");
    }
  }
  return DieSpec::make(std::move(faces));
}

SampleSpace::SampleSpace(DieSpec die, unsigned d) : die_(std::move(die)), d_(d) {
  if (d == 0)
    throw ValidationError("d: number of rolls must be at least 1");
  cardinality_ = ipow(BigInt(die_.face_count()), d);
  denominator_ = ipow(BigInt(die_.total_weight()), d);
}

SampleSpace power_space(const DieSpec &die, unsigned d) { return SampleSpace(die, d); }

const Face &SampleSpace::face_at(const Outcome &outcome, unsigned position_1based) const {
  return die_.faces()[outcome.indices[position_1based - 1]];
}

long long SampleSpace::value_at(const Outcome &outcome, unsigned position_1based) const {
  return face_at(outcome, position_1based).value;
}

long long SampleSpace::outcome_sum(const Outcome &outcome) const {
  long long s = 0;
  for (std::uint32_t i : outcome.indices)
    s += die_.faces()[i].value;
  return s;
}

BigInt SampleSpace::outcome_weight(const Outcome &outcome) const {
  BigInt w = 1;
  for (std::uint32_t i : outcome.indices)
    w *= die_.faces()[i].weight;
  return w;
}

std::string SampleSpace::render_outcome(const Outcome &outcome) const {
  std::string s = "(";
  for (std::size_t i = 0; i < outcome.indices.size(); ++i) {
    if (i > 0)
      s += ",";
    s += die_.faces()[outcome.indices[i]].label;
  }
  s += ")";
  return s;
}

OutcomeStream::OutcomeStream(const SampleSpace &space, std::uint64_t cap) : space_(space) {
  if (space.cardinality() > cap)
    throw CapExceededError(
        "enumeration refused: cardinality " + space.cardinality().str() +
        " exceeds cap " + std::to_string(cap) +
        "; for the sum distribution use the convolution path instead");
  current_.indices.assign(space.dice_count(), 0);
}

const Outcome *OutcomeStream::next() {
  if (exhausted_)
    return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  // Odometer increment, last position fastest: lexicographic order.
  const std::size_t n = space_.die().face_count();
  for (std::size_t i = current_.indices.size(); i-- > 0;) {
    if (++current_.indices[i] < n)
      return &current_;
    current_.indices[i] = 0;
  }
  exhausted_ = true;
  return nullptr;
}

void for_each_outcome(const SampleSpace &space,
                      const std::function<void(const Outcome &)> &fn,
                      std::uint64_t cap) {
  OutcomeStream stream(space, cap);
  while (const Outcome *o = stream.next())
    fn(*o);
}

} // namespace dicelab
