#include <doctest.h>

#include <cmath>

#include "nadyn/space.hpp"

using namespace nadyn;

namespace {

// Brute-force shift metric, independent of the production accumulation.
double shift_distance_oracle(const Word& a, const Word& b, int window) {
  double s = 0;
  for (long i = -window; i <= window; ++i)
    if (a.bit(i) != b.bit(i)) s += std::pow(2.0, -static_cast<double>(std::labs(i)));
  return s;
}

}  // namespace

TEST_CASE("interval and circle distances") {
  CHECK(distance(Point::interval(Rational(0)), Point::interval(Rational(2, 3))) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(distance(Point::circle(kPi / 2), Point::circle(3 * kPi / 2)) == doctest::Approx(kPi).epsilon(1e-15));
  // Wrap-around: the short way across zero.
  CHECK(distance(Point::circle(0.1), Point::circle(kTau - 0.1)) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK_THROWS_AS(distance(Point::interval(0.5), Point::circle(0.5)), SpaceMismatch);
}

TEST_CASE("shift distance matches the brute-force sum") {
  Space s = Space::binary_shift(8);
  Point zeros = Point::shift(s, Word::zeros());
  Point one_at_zero = Point::shift(s, Word::single_one(0));
  CHECK(distance(zeros, one_at_zero) == 1.0);

  Word a = *Word::parse("1011@-2");
  Word b = *Word::parse("1101@-1");
  Point pa = Point::shift(s, a), pb = Point::shift(s, b);
  CHECK(distance(pa, pb) == doctest::Approx(shift_distance_oracle(a, b, 8)).epsilon(1e-15));
  CHECK(distance(pa, pb) == distance(pb, pa));
}

TEST_CASE("triangle inequality: exact on dyadic interval/circle triples, 1e-12 on shift") {
  std::vector<Point> xs;
  for (int k = 0; k <= 32; ++k) xs.push_back(Point::interval(Rational(k, 32)));
  for (size_t i = 0; i < xs.size(); i += 3)
    for (size_t j = 0; j < xs.size(); j += 4)
      for (size_t k = 0; k < xs.size(); k += 5)
        CHECK(distance(xs[i], xs[k]) <= distance(xs[i], xs[j]) + distance(xs[j], xs[k]));

  std::vector<Point> angles;
  for (int k = 0; k < 16; ++k) angles.push_back(Point::circle_over_pi(Rational(k, 8)));
  for (size_t i = 0; i < angles.size(); ++i)
    for (size_t j = 0; j < angles.size(); j += 2)
      for (size_t k = 0; k < angles.size(); k += 3)
        CHECK(distance(angles[i], angles[k]) <=
              distance(angles[i], angles[j]) + distance(angles[j], angles[k]) + 1e-15);

  Space s = Space::binary_shift(6);
  std::vector<Point> words = space_grid(s, 128);
  for (size_t i = 0; i < words.size(); i += 11)
    for (size_t j = 0; j < words.size(); j += 13)
      for (size_t k = 0; k < words.size(); k += 17)
        CHECK(distance(words[i], words[k]) <=
              distance(words[i], words[j]) + distance(words[j], words[k]) + 1e-12);
}

TEST_CASE("shift distance is invariant under simultaneous negation") {
  Space s = Space::binary_shift(8);
  std::vector<Point> words = space_grid(s, 128);
  for (size_t i = 0; i < words.size(); i += 7)
    for (size_t j = 0; j < words.size(); j += 9) {
      Point ni = Point::shift(s, words[i].word().negated_range(-8, 8));
      Point nj = Point::shift(s, words[j].word().negated_range(-8, 8));
      CHECK(distance(words[i], words[j]) == doctest::Approx(distance(ni, nj)).epsilon(1e-15));
    }
}

TEST_CASE("epsilon net shapes on the interval") {
  auto net = epsilon_net(Space::unit_interval(), 0.25);
  REQUIRE(net.size() == 4);
  // Centers 1/8, 3/8, 5/8, 7/8 with radius 1/4, clipped to (0,1).
  CHECK(net[0].lo() == 0.0);
  CHECK(net[0].hi() == doctest::Approx(3.0 / 8));
  CHECK(net[1].lo() == doctest::Approx(1.0 / 8));
  CHECK(net[1].hi() == doctest::Approx(5.0 / 8));
  CHECK(net[3].hi() == 1.0);
  CHECK_THROWS_AS(epsilon_net(Space::unit_interval(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_net(Space::unit_interval(), 2.0), std::invalid_argument);
}

TEST_CASE("epsilon net shapes on the circle") {
  auto net = epsilon_net(Space::circle(), kPi / 2);
  REQUIRE(net.size() == 4);
  for (const OpenSet& arc : net) CHECK(arc.hi() - arc.lo() == doctest::Approx(kPi));
}

TEST_CASE("epsilon net on the shift space: cylinders fixing [-1,1] at radius 1/4") {
  Space s = Space::binary_shift(8);
  auto net = epsilon_net(s, 0.25);
  REQUIRE(net.size() == 8);  // 2^3 patterns over [-1, 1]
  for (const OpenSet& cyl : net) {
    CHECK(cyl.fix_begin() == -1);
    CHECK(cyl.fix_end() == 2);
    // Brute-force diameter over the sampled extensions stays within 2*radius.
    auto pts = sample_grid(cyl, 4);
    double diam = 0;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) diam = std::max(diam, distance(pts[i], pts[j]));
    CHECK(diam <= 0.5 + 1e-15);
  }
  // Default detector radius 1/8 puts the fixed block at [-2, 2].
  auto net8 = epsilon_net(s, 1.0 / 8);
  CHECK(net8.size() == 32);
  CHECK(net8[0].fix_begin() == -2);
}

TEST_CASE("epsilon net is deterministic and covers the sample grid") {
  for (const Space& s : {Space::unit_interval(), Space::circle(), Space::binary_shift(8)}) {
    double radius = s.kind() == SpaceKind::BinaryShift ? 0.25 : 1.0 / 16;
    auto net1 = epsilon_net(s, radius);
    auto net2 = epsilon_net(s, radius);
    REQUIRE(net1.size() == net2.size());
    for (size_t i = 0; i < net1.size(); ++i) CHECK(net1[i].str() == net2[i].str());
    for (const Point& p : space_grid(s, 64)) {
      bool covered = false;
      for (const OpenSet& u : net1) covered = covered || u.contains(p);
      CHECK(covered);
    }
  }
}

TEST_CASE("sample grids") {
  auto pts = sample_grid(OpenSet::interval(0, 1), 3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].exact()->str() == "1/4");
  CHECK(pts[1].exact()->str() == "1/2");
  CHECK(pts[2].exact()->str() == "3/4");

  auto arc = sample_grid(OpenSet::arc(0, kPi), 1);
  REQUIRE(arc.size() == 1);
  CHECK(arc[0].coord() == doctest::Approx(kPi / 2));

  Space s = Space::binary_shift(2);
  auto words = sample_grid(OpenSet::cylinder(s, 0, {1}), 4);
  REQUIRE(words.size() == 4);  // x0 = 1, x_{-1} and x_1 free, zero elsewhere
  for (const Point& p : words) {
    CHECK(p.word().bit(0) == 1);
    CHECK(p.word().bit(2) == 0);
    CHECK(p.word().bit(-2) == 0);
  }
}

TEST_CASE("open set validation") {
  CHECK_THROWS_AS(OpenSet::interval(0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(OpenSet::interval(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(OpenSet::arc(7.0, 8.0), std::invalid_argument);
  Space s = Space::binary_shift(2);
  CHECK_THROWS_AS(OpenSet::cylinder(s, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(OpenSet::cylinder(s, -3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(OpenSet::cylinder(s, 0, {2}), std::invalid_argument);
}

TEST_CASE("arc membership handles the wrap") {
  OpenSet arc = OpenSet::arc(5.5, 5.5 + 2.0);  // crosses zero
  CHECK(arc.contains(Point::circle(6.0)));
  CHECK(arc.contains(Point::circle(0.5)));
  CHECK(!arc.contains(Point::circle(3.0)));
}

TEST_CASE("words shift exactly and count their shifts") {
  Word w = *Word::parse("1011@-2");
  CHECK(w.shifted_left().shifted_right() == w);
  CHECK(w.shifted_right().shifted_left() == w);
  CHECK(w.shifted_left().bit(-3) == 1);
  CHECK(w.shifted_left().shift_count() == 1);
  CHECK(w.shifted_left().shifted_right().shift_count() == 2);
  CHECK(Word::parse("0@0")->all_zero());
}
