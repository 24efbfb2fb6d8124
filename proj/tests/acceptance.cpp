// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Everything runs at the parameters stated here; no
// tolerance is left to later calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nadyn/scenario.hpp"

using namespace nadyn;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Point> pick_seeds(const Space& s, size_t want) {
  std::vector<Point> grid = space_grid(s, static_cast<int>(want));
  if (grid.size() <= want) return grid;
  std::vector<Point> out;
  size_t stride = grid.size() / want;
  for (size_t i = 0; i < want; ++i) out.push_back(grid[i * stride]);
  return out;
}

// 1. omega_n == omega^k_n o omega_k for every fixture, k < n <= 40, 25 seeds.
void criterion_composition_identity() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const std::string& name : fixture_names()) {
    const Schedule& f = get_fixture(name).schedule;
    for (const Point& seed : pick_seeds(f.space(), 25)) {
      Orbit orbit = compute_orbit(f, seed, 40);
      for (long k = 1; k < 40 && ok; ++k)
        for (long n = k + 1; n <= 40 && ok; ++n) {
          double err = distance(orbit.points[static_cast<size_t>(n)],
                                evolve_from(f, k, n - k, orbit.points[static_cast<size_t>(k)]));
          if (!(err <= 1e-12)) {
            ok = false;
            detail = name + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                     " err=" + std::to_string(err);
          }
        }
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 5.0 && ok) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + "s exceeds 5s";
  }
  report(1, "composition identity over all fixtures", ok,
         ok ? std::to_string(elapsed).substr(0, 4) + "s" : detail);
}

// 2. prox1: (0,1) pinned at distance 2/3 for the full family, proximal at
// n=1 once truncated.
void criterion_prox1() {
  DetectorParams p = DetectorParams::defaults_for(Space::unit_interval());
  p.horizon = 200;
  const Schedule& f = get_fixture("prox1").schedule;
  Point zero = Point::interval(Rational(0)), one = Point::interval(Rational(1));
  Verdict full = check_proximal(f, zero, one, p);
  Verdict trunc = check_proximal(f.truncated(1), zero, one, p);
  double min_d = full.evidence["min_distance"].get<double>();
  bool ok = full.status == VerdictStatus::NoWitnessAtScale && std::fabs(min_d - 2.0 / 3.0) <= 1e-12 &&
            trunc.status == VerdictStatus::Witnessed && trunc.evidence["argmin"].get<long>() == 1;
  report(2, "prox1 reproduction", ok, "min distance " + std::to_string(min_d));
}

// 3. prox3: (0.9, 1.0) collapses at n=1 for the full family; every truncated
// orbit distance stays 0.1 up to n=200.
void criterion_prox3() {
  DetectorParams p = DetectorParams::defaults_for(Space::unit_interval());
  p.horizon = 200;
  const Schedule& f = get_fixture("prox3").schedule;
  Point a = Point::interval(Rational(9, 10)), b = Point::interval(Rational(1));
  Verdict full = check_proximal(f, a, b, p);
  bool ok = full.status == VerdictStatus::Witnessed && full.evidence["argmin"].get<long>() == 1 &&
            full.evidence["min_distance"].get<double>() == 0.0;
  Schedule trunc = f.truncated(1);
  Point x = a, y = b;
  for (long n = 1; n <= 200 && ok; ++n) {
    SelfMap step = trunc.at(n);
    x = apply(step, x);
    y = apply(step, y);
    ok = std::fabs(distance(x, y) - 0.1) <= 1e-12;
  }
  report(3, "prox3 reproduction", ok);
}

// 4. prox2: interior pair proximal within 64 steps at 1e-9; truncation pins
// it at pi/4. (Endpoints of [0,pi] stay apart; only interior pairs witness.)
void criterion_prox2() {
  DetectorParams p = DetectorParams::defaults_for(Space::circle());
  const Schedule& f = get_fixture("prox2").schedule;
  Point a = Point::circle_over_pi(Rational(1, 4)), b = Point::circle_over_pi(Rational(1, 2));
  Verdict full = check_proximal(f, a, b, p);
  Verdict trunc = check_proximal(f.truncated(1), a, b, p);
  double min_d = trunc.evidence["min_distance"].get<double>();
  bool ok = full.status == VerdictStatus::Witnessed &&
            trunc.status == VerdictStatus::NoWitnessAtScale && std::fabs(min_d - kPi / 4) <= 1e-12;
  report(4, "prox2 reproduction (interior pair)", ok,
         "witnessed at n=" + std::to_string(full.evidence["argmin"].get<long>()));
}

// 5. sens: nothing at any scale for the full family; everything, with
// constant 1/2, for the truncation.
void criterion_sens() {
  auto start = std::chrono::steady_clock::now();
  DetectorParams p = DetectorParams::defaults_for(Space::unit_interval());
  const Schedule& f = get_fixture("sens").schedule;
  Schedule trunc = f.truncated(1);
  bool ok = true;
  std::string detail;
  for (const char* prop : {"transitivity", "weak_mixing", "topological_mixing", "sensitivity"}) {
    Verdict base = run_property(prop, f, p);
    Verdict tail = run_property(prop, trunc, p);
    if (base.status != VerdictStatus::NoWitnessAtScale || tail.status != VerdictStatus::Witnessed) {
      ok = false;
      detail = prop;
    }
    if (std::string(prop) == "sensitivity" && (!tail.delta() || *tail.delta() != 0.5)) {
      ok = false;
      detail = "sensitivity constant";
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + "s exceeds 60s";
  }
  report(5, "sens example reproduction", ok,
         ok ? std::to_string(elapsed).substr(0, 4) + "s" : detail);
}

// 6. Feeble-open transfer: the tent family keeps every mixing/sensitivity
// status and its sensitivity constant under truncation by 1..3.
void criterion_feeble_transfer() {
  DetectorParams p = DetectorParams::defaults_for(Space::unit_interval());
  const Schedule& f = get_fixture("tent_autonomous").schedule;
  bool ok = family_is_feeble_open(f);
  std::string detail;
  for (const std::string& prop :
       {std::string("transitivity"), std::string("weak_mixing"), std::string("topological_mixing"),
        std::string("sensitivity"), std::string("cofinite_sensitivity"),
        std::string("syndetic_sensitivity")}) {
    Verdict base = run_property(prop, f, p);
    for (long k : {1L, 2L, 3L}) {
      Verdict trunc = run_property(prop, f.truncated(k), p);
      if (trunc.status != base.status || trunc.delta() != base.delta()) {
        ok = false;
        detail = prop + " at k=" + std::to_string(k);
      }
    }
  }
  report(6, "feeble-open truncation transfer for the tent family", ok, detail);
}

// 7. Infinite rearrangement: the block family is sensitive (constant >= 1/2)
// and not equicontinuous; its alternating rearrangement is the opposite; the
// block compositions at 2, 6, 12 are the identity, exactly.
void criterion_infinite_rearrangement() {
  Space s = get_fixture("shift_block").schedule.space();
  const Schedule& blocks = get_fixture("shift_block").schedule;
  const Schedule& alt = get_fixture("shift_alternating").schedule;
  DetectorParams p = DetectorParams::defaults_for(s);

  Verdict f_sens = check_sensitivity(blocks, p);
  Verdict g_sens = check_sensitivity(alt, p);
  Verdict f_eq = check_equicontinuity(blocks, p);
  Verdict g_eq = check_equicontinuity(alt, p);
  bool ok = f_sens.status == VerdictStatus::Witnessed && f_sens.delta() && *f_sens.delta() >= 0.5 &&
            g_sens.status == VerdictStatus::NoWitnessAtScale &&
            f_eq.status == VerdictStatus::Refuted && g_eq.status == VerdictStatus::Witnessed;
  for (long n : {1L, 2L, 3L})
    for (const char* lit : {"1@0", "1101@-2", "0@0"}) {
      Word w = *Word::parse(lit);
      ok = ok && evolve(blocks, n * (n + 1), Point::shift(s, w)).word() == w;
    }
  report(7, "infinite rearrangement flips sensitivity and equicontinuity", ok);
}

// 8. Minimality/equicontinuity equivalence on the rotation; identity fails
// minimality.
void criterion_minimality_equicontinuity() {
  const Schedule& rot = get_fixture("rotation_minimal").schedule;
  DetectorParams pm = DetectorParams::defaults_for(Space::circle());
  pm.epsilon_net = kPi / 8;
  pm.horizon = 128;
  DetectorParams pe = DetectorParams::defaults_for(Space::circle());
  Verdict m0 = check_minimality(rot, pm);
  Verdict e0 = check_equicontinuity(rot, pe);
  bool ok = m0.status == VerdictStatus::Witnessed && e0.status == VerdictStatus::Witnessed;
  for (long k : {1L, 2L, 3L}) {
    ok = ok && check_minimality(rot.truncated(k), pm).status == m0.status;
    ok = ok && check_equicontinuity(rot.truncated(k), pe).status == e0.status;
  }
  Verdict ident = check_minimality(get_fixture("identity_autonomous").schedule,
                                   DetectorParams::defaults_for(Space::unit_interval()));
  ok = ok && ident.status == VerdictStatus::Refuted;
  report(8, "minimality/equicontinuity stable on the rotation; identity refuted", ok);
}

// 9. Detector hierarchy on every fixture at its default parameters.
void criterion_hierarchy() {
  bool ok = true;
  std::string detail;
  for (const std::string& name : fixture_names()) {
    const Schedule& f = get_fixture(name).schedule;
    DetectorParams p = DetectorParams::defaults_for(f.space());
    bool tm = check_topological_mixing(f, p).status == VerdictStatus::Witnessed;
    bool wm = check_weak_mixing(f, p).status == VerdictStatus::Witnessed;
    bool tr = check_transitivity(f, p).status == VerdictStatus::Witnessed;
    if ((tm && !wm) || (wm && !tr)) {
      ok = false;
      detail = name;
    }
  }
  report(9, "topological mixing => weak mixing => transitivity on every fixture", ok, detail);
}

// 10. Oracles: structural feeble-openness against brute-force interior
// checks on the 1/32 net, and the preimage/evaluation round trip.
void criterion_oracles() {
  bool ok = true;
  std::string detail;
  for (const std::string& name : named_map_names()) {
    const SelfMap& f = named_map(name);
    bool brute = true;
    for (const OpenSet& u : epsilon_net(f.space(), 1.0 / 32)) brute = brute && image_of(f, u).has_interior();
    if (brute != is_feeble_open(f)) {
      ok = false;
      detail = "feeble mismatch on " + name;
    }
  }
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (const std::string& name : named_map_names()) {
    const SelfMap& f = named_map(name);
    for (int trial = 0; trial < 100 && ok; ++trial) {
      long long den = static_cast<long long>(next() % 60) + 2;
      long long num = static_cast<long long>(next() % static_cast<unsigned long long>(den + 1));
      Point x = f.space().kind() == SpaceKind::Circle
                    ? Point::circle_over_pi(Rational(2 * num, den))
                    : (f.space().kind() == SpaceKind::BinaryShift
                           ? Point::shift(f.space(), Word::single_one(static_cast<long>(num % 5) - 2))
                           : Point::interval(Rational(num, den)));
      Point y = apply(f, x);
      auto pre = preimages(f, y);
      if (pre.empty()) {
        ok = false;
        detail = "empty preimage under " + name;
        break;
      }
      for (const Point& z : pre)
        if (!(distance(apply(f, z), y) < 1e-12)) {
          ok = false;
          detail = "preimage of " + name + " fails to evaluate back";
        }
    }
  }
  report(10, "feeble-openness and preimage oracles", ok, detail);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion_composition_identity();
  criterion_prox1();
  criterion_prox3();
  criterion_prox2();
  criterion_sens();
  criterion_feeble_transfer();
  criterion_infinite_rearrangement();
  criterion_minimality_equicontinuity();
  criterion_hierarchy();
  criterion_oracles();
  std::printf("%d/10 criteria passed (%.1f s total)\n", 10 - g_failures, seconds_since(start));
  return g_failures == 0 ? 0 : 1;
}
