#include <doctest.h>

#include "nadyn/detectors.hpp"
#include "nadyn/fixtures.hpp"
#include "nadyn/json_io.hpp"

using namespace nadyn;

namespace {

const Schedule& fx(const char* name) { return get_fixture(name).schedule; }

DetectorParams interval_defaults() { return DetectorParams::defaults_for(Space::unit_interval()); }

}  // namespace

TEST_CASE("transitivity detector") {
  DetectorParams p = interval_defaults();
  Verdict tent = check_transitivity(fx("tent_autonomous"), p);
  CHECK(tent.status == VerdictStatus::Witnessed);
  CHECK(tent.evidence["pair_count"].get<size_t>() == 256);

  Verdict sens = check_transitivity(fx("sens"), p);
  CHECK(sens.status == VerdictStatus::NoWitnessAtScale);
  CHECK(sens.evidence.contains("unhit_pair"));

  Verdict ident = check_transitivity(fx("identity_autonomous"), p);
  CHECK(ident.status == VerdictStatus::NoWitnessAtScale);
}

TEST_CASE("transitivity witness replays through the composition") {
  DetectorParams p = interval_defaults();
  Verdict tent = check_transitivity(fx("tent_autonomous"), p);
  REQUIRE(tent.status == VerdictStatus::Witnessed);
  const auto& worst = tent.evidence["worst"];
  Point seed = point_from_json(worst["seed"]);
  long n = worst["time"].get<long>();
  Point image = evolve(fx("tent_autonomous"), n, seed);
  CHECK(distance(image, point_from_json(worst["image"])) < p.tol);
  size_t v = worst["v"].get<size_t>();
  CHECK(epsilon_net(Space::unit_interval(), p.epsilon_net)[v].contains(image));
}

TEST_CASE("weak mixing detector") {
  DetectorParams p = interval_defaults();
  p.epsilon_net = 0.25;  // coarse net keeps the quadruple sweep cheap
  CHECK(check_weak_mixing(fx("tent_autonomous"), p).status == VerdictStatus::Witnessed);
  CHECK(check_weak_mixing(fx("identity_autonomous"), p).status == VerdictStatus::NoWitnessAtScale);
  CHECK(check_weak_mixing(fx("sens"), p).status == VerdictStatus::NoWitnessAtScale);
}

TEST_CASE("topological mixing detector") {
  DetectorParams p = interval_defaults();
  p.epsilon_net = 0.25;
  Verdict tent = check_topological_mixing(fx("tent_autonomous"), p);
  CHECK(tent.status == VerdictStatus::Witnessed);
  CHECK(tent.evidence["max_threshold"].get<long>() <= p.horizon / 2);
  CHECK(check_topological_mixing(fx("identity_autonomous"), p).status ==
        VerdictStatus::NoWitnessAtScale);
  // The block family keeps returning to the identity, so tails never settle.
  Verdict blocks = check_topological_mixing(fx("shift_block"), DetectorParams::defaults_for(fx("shift_block").space()));
  CHECK(blocks.status == VerdictStatus::NoWitnessAtScale);
}

TEST_CASE("sensitivity detector and its constant") {
  DetectorParams p = interval_defaults();
  p.horizon = 32;
  p.delta_list = {0.5, 0.25, 0.125};
  Verdict tent = check_sensitivity(fx("tent_autonomous"), p);
  CHECK(tent.status == VerdictStatus::Witnessed);
  CHECK(*tent.delta() == 0.5);

  CHECK(check_sensitivity(fx("sens"), interval_defaults()).status == VerdictStatus::NoWitnessAtScale);
  CHECK(check_sensitivity(fx("identity_autonomous"), interval_defaults()).status ==
        VerdictStatus::NoWitnessAtScale);
}

TEST_CASE("sensitivity witness replays: sampled pairs reproduce the diameter") {
  DetectorParams p = interval_defaults();
  Verdict tent = check_sensitivity(fx("tent_autonomous"), p);
  REQUIRE(tent.status == VerdictStatus::Witnessed);
  double delta = *tent.delta();
  for (const auto& ball : tent.evidence["per_ball"]) {
    long n = ball["time"].get<long>();
    if (ball["route"] == "sampled") {
      Point a = point_from_json(ball["seed_pair"][0]);
      Point b = point_from_json(ball["seed_pair"][1]);
      double d = distance(evolve(fx("tent_autonomous"), n, a), evolve(fx("tent_autonomous"), n, b));
      CHECK(d == doctest::Approx(ball["diameter"].get<double>()).epsilon(1e-12));
      CHECK(d > delta);
    } else {
      CHECK(ball["diameter"].get<double>() > delta);
    }
  }
}

TEST_CASE("cofinite and syndetic sensitivity") {
  DetectorParams p = interval_defaults();
  CHECK(*check_cofinite_sensitivity(fx("tent_autonomous"), p).delta() == 0.5);
  CHECK(*check_syndetic_sensitivity(fx("tent_autonomous"), p).delta() == 0.5);
  CHECK(check_cofinite_sensitivity(fx("identity_autonomous"), p).status ==
        VerdictStatus::NoWitnessAtScale);

  DetectorParams ps = DetectorParams::defaults_for(fx("shift_block").space());
  CHECK(check_cofinite_sensitivity(fx("shift_block"), ps).status == VerdictStatus::NoWitnessAtScale);
  // Expansion gaps grow like the block length; they stay under the default
  // bound up to horizon 64 and burst through it on the way to 128.
  DetectorParams ps_long = ps;
  ps_long.horizon = 128;
  CHECK(check_syndetic_sensitivity(fx("shift_block"), ps).status == VerdictStatus::Witnessed);
  CHECK(check_syndetic_sensitivity(fx("shift_block"), ps_long).status ==
        VerdictStatus::NoWitnessAtScale);
}

TEST_CASE("equicontinuity detector") {
  DetectorParams pi = interval_defaults();
  Verdict ident = check_equicontinuity(fx("identity_autonomous"), pi);
  CHECK(ident.status == VerdictStatus::Witnessed);
  CHECK(ident.evidence["modulus"][0]["delta"].get<double>() == 0.25);  // delta = epsilon survives

  Verdict tent = check_equicontinuity(fx("tent_autonomous"), pi);
  CHECK(tent.status == VerdictStatus::Refuted);
  // Replay the counterexample pair.
  Point a = point_from_json(tent.evidence["pair"][0]);
  Point b = point_from_json(tent.evidence["pair"][1]);
  long n = tent.evidence["diverged_at"].get<long>();
  double d = distance(evolve(fx("tent_autonomous"), n, a), evolve(fx("tent_autonomous"), n, b));
  CHECK(d == doctest::Approx(tent.evidence["distance"].get<double>()).epsilon(1e-12));
  CHECK(d >= tent.evidence["epsilon"].get<double>());

  DetectorParams ps = DetectorParams::defaults_for(fx("shift_alternating").space());
  Verdict alternating = check_equicontinuity(fx("shift_alternating"), ps);
  CHECK(alternating.status == VerdictStatus::Witnessed);
  // One shift is 2-Lipschitz in this metric, so eps/2 survives at every level.
  for (const auto& row : alternating.evidence["modulus"])
    CHECK(row["delta"].get<double>() >= row["epsilon"].get<double>() / 2 - 1e-15);
  CHECK(check_equicontinuity(fx("shift_block"), ps).status == VerdictStatus::Refuted);
}

TEST_CASE("proximality detector") {
  DetectorParams p = interval_defaults();
  Point zero = Point::interval(Rational(0));
  Point one = Point::interval(Rational(1));
  Verdict trunc = check_proximal(fx("prox1").truncated(1), zero, one, p);
  CHECK(trunc.status == VerdictStatus::Witnessed);
  CHECK(trunc.evidence["argmin"].get<long>() == 1);

  Verdict full = check_proximal(fx("prox1"), zero, one, p);
  CHECK(full.status == VerdictStatus::NoWitnessAtScale);
  CHECK(full.evidence["min_distance"].get<double>() == doctest::Approx(2.0 / 3).epsilon(1e-14));

  Verdict same = check_proximal(fx("tent_autonomous"), one, one, p);
  CHECK(same.status == VerdictStatus::Witnessed);
  CHECK(same.evidence["min_distance"].get<double>() == 0.0);

  // Replaying the approach time reproduces the reported minimum.
  long n = trunc.evidence["argmin"].get<long>();
  const Schedule& t1 = fx("prox1").truncated(1);
  CHECK(distance(evolve(t1, n, zero), evolve(t1, n, one)) ==
        doctest::Approx(trunc.evidence["min_distance"].get<double>()).epsilon(1e-12));
}

TEST_CASE("minimality detector") {
  DetectorParams rot = DetectorParams::defaults_for(Space::circle());
  rot.epsilon_net = kPi / 8;
  rot.horizon = 128;
  CHECK(check_minimality(fx("rotation_minimal"), rot).status == VerdictStatus::Witnessed);

  Verdict ident = check_minimality(fx("identity_autonomous"), interval_defaults());
  CHECK(ident.status == VerdictStatus::Refuted);

  Verdict sens = check_minimality(fx("sens"), interval_defaults());
  CHECK(sens.status == VerdictStatus::Refuted);
}

TEST_CASE("periodic point detector") {
  Space s = fx("shift_block").space();
  Point w = Point::shift(s, Word::single_one(0));
  // omega_2 restores every word but omega_4 is a double shift, so period 2
  // fails as soon as two multiples are required.
  CHECK(check_periodic_point(fx("shift_block"), w, 2, 1, 1e-9).status == VerdictStatus::Witnessed);
  Verdict failed = check_periodic_point(fx("shift_block"), w, 2, 2, 1e-9);
  CHECK(failed.status == VerdictStatus::Refuted);
  CHECK(failed.evidence["failed_at_multiple"].get<long>() == 2);

  CHECK(check_periodic_point(fx("identity_autonomous"), Point::interval(0.3), 1, 8, 1e-9).status ==
        VerdictStatus::Witnessed);
  CHECK(check_periodic_point(fx("tent_autonomous"), Point::interval(Rational(2, 3)), 1, 8, 1e-9).status ==
        VerdictStatus::Witnessed);
}

TEST_CASE("family feeble openness") {
  CHECK(!family_is_feeble_open(fx("sens")));
  CHECK(family_is_feeble_open(fx("tent_autonomous")));
  CHECK(family_is_feeble_open(fx("shift_block")));
  CHECK(family_is_feeble_open(fx("prox1")));
  CHECK(!family_is_feeble_open(fx("prox3")));
  // Deleting the offending head restores feeble openness.
  CHECK(family_is_feeble_open(fx("sens").with_deletion(1)));
}

TEST_CASE("verdict hierarchy: topological mixing implies weak mixing implies transitivity") {
  for (const std::string& name : fixture_names()) {
    const Schedule& f = fx(name.c_str());
    DetectorParams p = DetectorParams::defaults_for(f.space());
    bool tm = check_topological_mixing(f, p).status == VerdictStatus::Witnessed;
    bool wm = check_weak_mixing(f, p).status == VerdictStatus::Witnessed;
    bool tr = check_transitivity(f, p).status == VerdictStatus::Witnessed;
    CAPTURE(name);
    CHECK((!tm || wm));
    CHECK((!wm || tr));
  }
}

TEST_CASE("feeble-open families keep their verdicts and constants under truncation") {
  for (const char* name : {"tent_autonomous", "shift_block"}) {
    const Schedule& f = fx(name);
    DetectorParams p = DetectorParams::defaults_for(f.space());
    Verdict base_sens = check_sensitivity(f, p);
    Verdict base_trans = check_transitivity(f, p);
    for (long k : {1L, 2L, 3L}) {
      Schedule trunc = f.truncated(k);
      Verdict s = check_sensitivity(trunc, p);
      CAPTURE(name);
      CAPTURE(k);
      CHECK(s.status == base_sens.status);
      CHECK(s.delta() == base_sens.delta());
      CHECK(check_transitivity(trunc, p).status == base_trans.status);
    }
  }
}

TEST_CASE("witnessed transitivity survives truncation on every fixture") {
  for (const std::string& name : fixture_names()) {
    const FixtureEntry& entry = get_fixture(name);
    for (const ExpectedVerdict& expected : entry.expected) {
      if (expected.property != "transitivity" || expected.status != VerdictStatus::Witnessed) continue;
      for (long k : {1L, 2L, 3L}) {
        CAPTURE(name);
        CAPTURE(k);
        CHECK(check_transitivity(entry.schedule.truncated(k), expected.params).status ==
              VerdictStatus::Witnessed);
      }
    }
  }
}

TEST_CASE("detectors are deterministic") {
  DetectorParams p = interval_defaults();
  Verdict a = check_sensitivity(fx("prox1"), p);
  Verdict b = check_sensitivity(fx("prox1"), p);
  CHECK(verdict_to_json(a).dump() == verdict_to_json(b).dump());
}

TEST_CASE("detector parameter validation") {
  DetectorParams p = interval_defaults();
  p.delta_list = {0.25, 0.5};  // not decreasing
  CHECK_THROWS_AS(check_sensitivity(fx("tent_autonomous"), p), std::invalid_argument);
  p = interval_defaults();
  p.epsilon_net = -1;
  CHECK_THROWS_AS(check_transitivity(fx("tent_autonomous"), p), std::invalid_argument);
}
