#include <doctest.h>

#include <chrono>
#include <set>

#include "dicelab/errors.hpp"
#include "dicelab/space.hpp"

using namespace dicelab;

TEST_CASE("make_die validation") {
  CHECK_THROWS_AS(DieSpec::make({}), ValidationError);
  CHECK_THROWS_AS(DieSpec::make({{"a", 1, 1}, {"a", 2, 1}}), ValidationError);
  CHECK_THROWS_AS(DieSpec::make({{"a", 1, 0}, {"b", 2, 0}}), ValidationError);
  // A single zero-weight face is fine as long as one face has weight.
  CHECK_NOTHROW(DieSpec::make({{"a", 1, 0}, {"b", 2, 1}}));
}

TEST_CASE("fair die and coin alphabets") {
  DieSpec die = DieSpec::fair_die();
  CHECK(die.face_count() == 6);
  CHECK(die.total_weight() == 6);
  CHECK(die.is_fair());

  DieSpec coin = DieSpec::fair_coin();
  CHECK(coin.face_count() == 2);
  CHECK(coin.faces()[0].label == "K");
  CHECK(coin.faces()[0].value == 1);
  CHECK(coin.faces()[1].label == "Z");
  CHECK(coin.faces()[1].value == 0);
  CHECK(coin.total_weight() == 2);
}

TEST_CASE("loaded die construction") {
  DieSpec die = parse_die_text("1:1,2:1,3:1,4:1,5:1,6:5");
  CHECK(die.face_count() == 6);
  CHECK(die.total_weight() == 10);
  CHECK(!die.is_fair());
}

TEST_CASE("die text parsing") {
  CHECK(parse_die_text("1-6").face_count() == 6);
  CHECK(parse_die_text("coin").faces()[0].label == "K");
  CHECK(parse_die_text("0-1").total_weight() == 2);
  CHECK_THROWS_AS(parse_die_text("6-1"), ValidationError);
  CHECK_THROWS_AS(parse_die_text("x"), ValidationError);
  CHECK_THROWS_AS(parse_die_text("1:1,,2:1"), ValidationError);
}

TEST_CASE("power space cardinality") {
  DieSpec die = DieSpec::fair_die();
  CHECK(power_space(die, 3).cardinality() == 216);
  CHECK(power_space(die, 4).cardinality() == 1296);
  CHECK(power_space(die, 10).cardinality() == BigInt("60466176"));
  CHECK(power_space(DieSpec::fair_coin(), 5).cardinality() == 32);
  CHECK_THROWS_AS(power_space(die, 0), ValidationError);
}

TEST_CASE("denominator equals cardinality for unit weights") {
  SampleSpace space = power_space(DieSpec::fair_die(), 4);
  CHECK(space.denominator() == space.cardinality());
  SampleSpace loaded = power_space(parse_die_text("1:1,2:1,3:1,4:1,5:1,6:5"), 3);
  CHECK(loaded.denominator() == 1000);
  CHECK(loaded.cardinality() == 216);
}

TEST_CASE("enumeration order for one die") {
  SampleSpace space = power_space(DieSpec::fair_die(), 1);
  OutcomeStream stream(space);
  for (std::uint32_t i = 0; i < 6; ++i) {
    const Outcome *o = stream.next();
    REQUIRE(o != nullptr);
    CHECK(o->indices == std::vector<std::uint32_t>{i});
  }
  CHECK(stream.next() == nullptr);
}

TEST_CASE("first coin outcome is (K,K)") {
  SampleSpace space = power_space(DieSpec::fair_coin(), 2);
  OutcomeStream stream(space);
  const Outcome *o = stream.next();
  REQUIRE(o != nullptr);
  CHECK(space.render_outcome(*o) == "(K,K)");
  int count = 1;
  while (stream.next())
    ++count;
  CHECK(count == 4);
}

TEST_CASE("enumeration yields each outcome once, in lexicographic order") {
  SampleSpace space = power_space(DieSpec::fair_die(), 3);
  std::set<Outcome> seen;
  Outcome prev;
  bool first = true;
  for_each_outcome(space, [&](const Outcome &o) {
    if (!first)
      CHECK(prev < o);
    prev = o;
    first = false;
    seen.insert(o);
  });
  CHECK(seen.size() == 216);
}

TEST_CASE("stream length equals cardinality") {
  for (unsigned d : {1u, 2u, 3u, 4u}) {
    SampleSpace space = power_space(DieSpec::fair_die(), d);
    std::uint64_t n = 0;
    for_each_outcome(space, [&](const Outcome &) { ++n; });
    CHECK(BigInt(n) == space.cardinality());
  }
}

TEST_CASE("outcome weights sum to the denominator") {
  for (const char *text : {"1-6", "1:1,2:1,3:1,4:1,5:1,6:5"}) {
    DieSpec die = parse_die_text(text);
    for (unsigned d : {1u, 2u, 3u}) {
      SampleSpace space = power_space(die, d);
      BigInt total = 0;
      for_each_outcome(space, [&](const Outcome &o) { total += space.outcome_weight(o); });
      CHECK(total == space.denominator());
    }
  }
}

TEST_CASE("enumeration cap refusal mentions cardinality and the cap") {
  SampleSpace space = power_space(DieSpec::fair_die(), 10);
  try {
    OutcomeStream stream(space, 1'000'000);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError &e) {
    std::string msg = e.what();
    CHECK(msg.find("60466176") != std::string::npos);
    CHECK(msg.find("1000000") != std::string::npos);
    CHECK(msg.find("convolution") != std::string::npos);
  }
}

TEST_CASE("space construction is O(1) in cardinality") {
  auto t0 = std::chrono::steady_clock::now();
  SampleSpace space = power_space(DieSpec::fair_die(), 10);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  CHECK(space.cardinality() == BigInt("60466176"));
  CHECK(ms < 1.0);
}

TEST_CASE("positions are 1-indexed on the user-facing surface") {
  SampleSpace space = power_space(DieSpec::fair_die(), 3);
  Outcome o{{0, 1, 5}};
  CHECK(space.value_at(o, 1) == 1);
  CHECK(space.value_at(o, 2) == 2);
  CHECK(space.value_at(o, 3) == 6);
}
