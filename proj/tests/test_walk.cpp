#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slfq/walk.hpp"
#include "support/fixture_quivers.hpp"

using namespace slfq;

TEST_CASE("single arrow walk") {
  Walk w = make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c0", "c1"}, std::nullopt});
  REQUIRE(w.steps.size() == 1);
  CHECK(w.steps[0].arrow_id == "a0");
  CHECK(!w.steps[0].inverted);
  CHECK(w.simple);
  CHECK(w.reduced);
  CHECK(!w.is_infinite());

  Walk inv = make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c1", "u"}, std::nullopt});
  CHECK(inv.steps[0].inverted);
  CHECK(inv.simple);
}

TEST_CASE("walk resolution failures") {
  CHECK_THROWS_AS(make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c0", "u"}, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c0", "zz"}, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_walk(fx::dinf(), WalkSpec{std::nullopt, {}, std::nullopt}),
                  std::invalid_argument);
  // Extension anchored off its tail.
  CHECK_THROWS_AS(make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c0"}, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c1"}, 3}),
                  std::invalid_argument);
}

TEST_CASE("immediate reversal is neither reduced nor simple") {
  Walk w = make_walk(fx::dinf(), WalkSpec{std::nullopt, {"c0", "c1", "c0"}, std::nullopt});
  CHECK(!w.reduced);
  CHECK(!w.simple);
}

TEST_CASE("zigzag upward walk is simple but not eventually directed") {
  Walk w = make_walk(fx::zigzag(), WalkSpec{std::nullopt, {"0"}, 0});
  CHECK(w.simple);
  CHECK(w.reduced);
  CHECK(w.is_infinite());
  CHECK(!w.back_eventually_path);
  REQUIRE(w.back_anchor.has_value());
  CHECK(w.back_anchor->second == 0);

  Walk deep = make_walk(fx::zigzag(), WalkSpec{std::nullopt, {"t0d3"}, 0});
  CHECK(deep.simple);
  CHECK(deep.back_anchor->second == 3);

  Walk ray = make_walk(fx::ray(), WalkSpec{std::nullopt, {"c"}, 0});
  CHECK(ray.back_eventually_path);
}

TEST_CASE("two sided walk through the core") {
  Walk w = make_walk(fx::example2(), WalkSpec{1, {"0"}, 0});
  CHECK(w.simple);
  CHECK(w.is_infinite());
  CHECK(w.front_anchor->first == 1);
  CHECK(w.back_anchor->first == 0);

  // Both continuations on one tail must overlap.
  Walk bad = make_walk(fx::example2(), WalkSpec{0, {"0"}, 0});
  CHECK(!bad.simple);
}

TEST_CASE("finite part climbing into a continuation is not simple") {
  Walk w = make_walk(fx::zigzag(), WalkSpec{std::nullopt, {"t0d2", "t0d1", "0"}, 0});
  // The back continuation runs upward from depth 0 and meets t0d1, t0d2.
  CHECK(!w.simple);

  Walk rev = make_walk(fx::zigzag(), WalkSpec{0, {"t0d2", "t0d1", "0"}, std::nullopt});
  CHECK(rev.simple);

  // Departing straight back into the arriving continuation.
  Walk turn = make_walk(fx::zigzag(), WalkSpec{0, {"t0d2", "t0d3"}, std::nullopt});
  CHECK(!turn.reduced);
  CHECK(!turn.simple);
}

TEST_CASE("walks from signed arrow lists") {
  Walk w = make_walk_from_arrows(fx::zigzag(), "0", {{"t0a1", true}, {"t0a2", false}});
  CHECK(w.spec.vertices == std::vector<std::string>{"0", "t0d1", "t0d2"});
  CHECK(w.simple);
  CHECK(w.steps[0].inverted);
  CHECK(!w.steps[1].inverted);

  CHECK_THROWS_AS(make_walk_from_arrows(fx::zigzag(), "0", {{"t0a2", false}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_walk_from_arrows(fx::zigzag(), "0", {{"nope", false}}),
                  std::invalid_argument);
}
