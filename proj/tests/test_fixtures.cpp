#include <doctest.h>

#include "nadyn/fixtures.hpp"
#include "nadyn/scenario.hpp"

using namespace nadyn;

TEST_CASE("registry contents and unknown-name errors") {
  for (const char* name : {"prox1", "prox1_h", "prox2", "prox3", "sens", "shift_block",
                           "shift_alternating", "rotation_minimal", "commuting_rotations",
                           "tent_autonomous", "identity_autonomous"})
    CHECK_NOTHROW(get_fixture(name));
  CHECK_THROWS_WITH_AS(get_fixture("nope"),
                       doctest::Contains("known fixtures:"), UnknownFixture);
  CHECK_THROWS_AS(named_map("nope"), UnknownFixture);
}

TEST_CASE("fixture anchor values") {
  CHECK(apply(get_fixture("sens").schedule.at(1), Point::interval(Rational(1, 4))).exact()->str() == "0");
  CHECK(apply(get_fixture("prox3").schedule.at(2), Point::interval(Rational(0))).exact()->str() == "1/2");
  Space s = get_fixture("shift_alternating").schedule.space();
  CHECK(get_fixture("shift_alternating").schedule.at(4) == SelfMap::shift_right(s));

  // The interpolated head of prox1 runs through its four anchors.
  const SelfMap& f = named_map("prox1_f");
  CHECK(apply(f, Point::interval(Rational(0))).exact()->str() == "0");
  CHECK(apply(f, Point::interval(Rational(1, 3))).exact()->str() == "1");
  CHECK(apply(f, Point::interval(Rational(2, 3))).exact()->str() == "0");
  CHECK(apply(f, Point::interval(Rational(1))).exact()->str() == "2/3");
  const SelfMap& h = named_map("prox1_h");
  CHECK(apply(h, Point::interval(Rational(0))).exact()->str() == "0");
  CHECK(apply(h, Point::interval(Rational(2, 3))).exact()->str() == "1/4");
  CHECK(apply(h, Point::interval(Rational(1))).exact()->str() == "1");
}

TEST_CASE("commutativity checks") {
  auto grid = space_grid(Space::unit_interval(), 256);
  CHECK(commuting_check(named_map("prox3_f"), named_map("prox3_g"), grid));
  CHECK(!commuting_check(named_map("prox1_f"), named_map("tent"), grid));
  CHECK(commuting_check(named_map("tent"), named_map("identity"), grid));
  auto circle_grid = space_grid(Space::circle(), 256);
  CHECK(commuting_check(named_map("rot1"), named_map("rot_half"), circle_grid));
  CHECK(!commuting_check(named_map("prox2_f"), named_map("prox2_g"), circle_grid));
}

TEST_CASE("the attracting fixed point of the prox2 tail") {
  const SelfMap& g = named_map("prox2_g");
  Point p = Point::circle_over_pi(Rational(3, 2));
  double gap = distance(p, Point::circle_over_pi(Rational(1)));
  for (int step = 0; step < 12 && gap > 1e-12; ++step) {
    p = apply(g, p);
    double next = distance(p, Point::circle_over_pi(Rational(1)));
    CHECK(next < gap);
    gap = next;
  }
  CHECK(gap <= 1e-12);
  // And it fixes [0, pi] pointwise.
  for (int k = 0; k <= 8; ++k) {
    Point x = Point::circle_over_pi(Rational(k, 8));
    CHECK(distance(apply(g, x), x) == 0.0);
  }
}

TEST_CASE("every fixture expectation table passes at its stated parameters") {
  // Universal properties report Refuted or survive at scale; existential
  // ones are Witnessed or run out of scale. No detector may cross over.
  auto allowed = [](const std::string& property, VerdictStatus status) {
    if (property == "equicontinuity" || property == "minimality")
      return status != VerdictStatus::NoWitnessAtScale;
    return status != VerdictStatus::Refuted;
  };
  for (const std::string& name : fixture_names()) {
    const FixtureEntry& entry = get_fixture(name);
    for (const ExpectedVerdict& expected : entry.expected) {
      Verdict v = run_property(expected.property, entry.schedule, expected.params);
      CAPTURE(name);
      CAPTURE(expected.property);
      CHECK(v.status == expected.status);
      CHECK(allowed(expected.property, v.status));
      if (expected.delta) {
        REQUIRE(v.delta().has_value());
        CHECK(*v.delta() == *expected.delta);
      }
    }
  }
}
