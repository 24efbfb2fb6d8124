#include <doctest.h>

#include "nadyn/family.hpp"
#include "nadyn/fixtures.hpp"

using namespace nadyn;

namespace {

bool same_prefix(const Schedule& a, const Schedule& b, long upto = 50) {
  for (long i = 1; i <= upto; ++i)
    if (!(a.at(i) == b.at(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("evolution basics") {
  const Schedule& prox1 = get_fixture("prox1").schedule;
  Point one = Point::interval(Rational(1));
  CHECK(evolve(prox1, 1, one).exact()->str() == "2/3");
  CHECK(evolve(prox1, 0, one).exact()->str() == "1");
  // The tail fixes 2/3, so the whole orbit of 1 is pinned there.
  for (long n : {2L, 10L, 40L}) CHECK(evolve(prox1, n, one).exact()->str() == "2/3");
}

TEST_CASE("windowed evolution") {
  const Schedule& sens = get_fixture("sens").schedule;
  Point half = Point::interval(Rational(1, 2));
  // Window skipping the head: three tent steps send 1/2 -> 1 -> 0 -> 0.
  CHECK(evolve_from(sens, 1, 3, half).exact()->str() == "0");
  for (long n = 0; n <= 20; ++n) {
    Point p = Point::interval(Rational(3, 7));
    CHECK(distance(evolve_from(sens, 0, n, p), evolve(sens, n, p)) == 0.0);
  }
}

TEST_CASE("block schedule: layout and identity returns") {
  Space s = Space::binary_shift(16);
  auto [blocks, alternating] = shift_rearrangement_pair(s);
  SelfMap fwd = SelfMap::shift_left(s), bwd = SelfMap::shift_right(s);
  std::vector<SelfMap> expected{fwd, bwd, fwd, fwd, bwd, bwd};
  for (size_t i = 0; i < expected.size(); ++i) CHECK(blocks.at(static_cast<long>(i + 1)) == expected[i]);

  // Equal counts of each shift over every completed double block.
  long count_fwd = 0;
  for (long i = 1; i <= 12; ++i)
    if (blocks.at(i) == fwd) ++count_fwd;
  CHECK(count_fwd == 6);
  long alt_fwd = 0;
  for (long i = 1; i <= 12; ++i)
    if (alternating.at(i) == fwd) ++alt_fwd;
  CHECK(alt_fwd == 6);

  Point w = Point::shift(s, *Word::parse("1101@-2"));
  for (long n : {1L, 2L, 3L}) CHECK(evolve(blocks, n * (n + 1), w).word() == w.word());
  // Partial blocks apply the plain shift power.
  Point two = evolve_from(blocks, 2, 2, w);  // indices 3 and 4 both shift left
  CHECK(two.word() == w.word().shifted_left().shifted_left());

  // Alternating family: the orbit of any word is {w, sigma(w)}.
  for (long m : {1L, 2L, 5L}) {
    CHECK(evolve(alternating, 2 * m, w).word() == w.word());
    CHECK(evolve(alternating, 2 * m + 1, w).word() == w.word().shifted_left());
  }
}

TEST_CASE("truncation") {
  const Schedule& sens = get_fixture("sens").schedule;
  Schedule tent = Schedule::periodic({named_map("tent")});
  CHECK(same_prefix(sens.truncated(1), tent));
  CHECK(same_prefix(sens.truncated(3).truncated(4), sens.truncated(7)));
  CHECK(same_prefix(tent.truncated(7), tent));
  CHECK_THROWS_AS(sens.truncated(-1), std::invalid_argument);
}

TEST_CASE("insertion and deletion invert each other") {
  const Schedule& sens = get_fixture("sens").schedule;
  Schedule tent = Schedule::periodic({named_map("tent")});
  CHECK(same_prefix(tent.with_insertion(1, named_map("sens_f")), sens));
  CHECK(same_prefix(sens.with_deletion(1), tent));
  CHECK(same_prefix(sens.with_insertion(4, named_map("prox1_f")).with_deletion(4), sens));
  CHECK(same_prefix(sens.with_deletion(2).with_insertion(2, sens.at(2)), sens));
  CHECK(same_prefix(tent.with_deletion(5), tent));
  CHECK_THROWS_AS(sens.with_insertion(1, SelfMap::shift_left(Space::binary_shift(4))), SpaceMismatch);

  // Inserting the identity delays the orbit by one index from there on.
  Schedule delayed = sens.with_insertion(3, named_map("identity"));
  Point p = Point::interval(Rational(2, 7));
  for (long n = 3; n <= 30; ++n)
    CHECK(distance(evolve(delayed, n, p), evolve(sens, n - 1, p)) == 0.0);
}

TEST_CASE("finite rearrangement touches only its support") {
  const Schedule& sens = get_fixture("sens").schedule;
  CHECK(same_prefix(sens.with_rearrangement({1, 2, 3}), sens));
  Schedule swapped = sens.with_rearrangement({2, 1});
  CHECK(swapped.at(1) == named_map("tent"));
  CHECK(swapped.at(2) == named_map("sens_f"));
  CHECK(swapped.at(3) == named_map("tent"));
  CHECK(same_prefix(swapped.truncated(2), sens.truncated(2)));
  CHECK_THROWS_AS(sens.with_rearrangement({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sens.with_rearrangement({0, 1}), std::invalid_argument);
}

TEST_CASE("composition identity across fixtures") {
  // omega_n = omega^k_n o omega_k on a reduced sweep; the acceptance suite
  // runs the full one.
  for (const char* name : {"sens", "prox3", "shift_alternating"}) {
    const Schedule& f = get_fixture(name).schedule;
    std::vector<Point> seeds = space_grid(f.space(), 8);
    for (const Point& p : seeds)
      for (long k = 1; k < 12; ++k)
        for (long n = k + 1; n <= 12; ++n)
          CHECK(distance(evolve(f, n, p), evolve_from(f, k, n - k, evolve(f, k, p))) <= 1e-12);
  }
}

TEST_CASE("truncated orbits are tails of the original orbit") {
  const Schedule& f = get_fixture("prox1").schedule;
  Point p = Point::interval(Rational(3, 11));
  long k = 2;
  Orbit full = compute_orbit(f, p, 30);
  Orbit tail = compute_orbit(f.truncated(k), evolve(f, k, p), 30 - k);
  for (long n = 0; n <= 30 - k; ++n)
    CHECK(distance(full.points[static_cast<size_t>(n + k)], tail.points[static_cast<size_t>(n)]) == 0.0);
}

TEST_CASE("orbit recomputation reproduces stored points bit for bit") {
  for (const char* name : {"sens", "prox2", "shift_block"}) {
    const Schedule& f = get_fixture(name).schedule;
    Point seed = space_grid(f.space(), 8)[3];
    Orbit a = compute_orbit(f, seed, 40);
    Orbit b = compute_orbit(f, seed, 40);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t n = 0; n < a.points.size(); ++n) {
      if (f.space().kind() == SpaceKind::BinaryShift)
        CHECK(a.points[n].word() == b.points[n].word());
      else
        CHECK(a.points[n].coord() == b.points[n].coord());
    }
  }
}

TEST_CASE("schedule indices start at one") {
  const Schedule& f = get_fixture("sens").schedule;
  CHECK_THROWS_AS(f.at(0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(f, -1, Point::interval(0.5)), std::invalid_argument);
}
