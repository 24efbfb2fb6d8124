#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "nadyn/family.hpp"

namespace nadyn {

// Finite bounds standing in for the quantifiers the definitions leave
// infinite: open sets range over the epsilon net, points over the sample
// grid, time over [1, horizon].
struct DetectorParams {
  double epsilon_net = 1.0 / 16;
  long horizon = 64;
  int grid_resolution = 128;
  std::vector<double> delta_list{0.5, 0.25, 0.125, 0.0625};
  double tol = 1e-9;
  long gap_bound = 8;

  // Interval/circle: radius 1/16. Shift: radius 1/8, i.e. the net of all
  // cylinders fixing [-2, 2].
  static DetectorParams defaults_for(const Space& s);
  void validate() const;
};

enum class VerdictStatus { Witnessed, Refuted, NoWitnessAtScale };

std::string to_string(VerdictStatus s);

// Detector outcome with replayable evidence. Existential properties are only
// ever Witnessed or NoWitnessAtScale; universal properties are Refuted by a
// concrete counterexample or Witnessed at scale with the surviving modulus.
struct Verdict {
  std::string property;
  VerdictStatus status = VerdictStatus::NoWitnessAtScale;
  DetectorParams params;
  nlohmann::json evidence;

  // The sensitivity constant for the sensitivity family of detectors.
  std::optional<double> delta() const;
};

// Every ordered net pair (U, V) must be connected: some grid point of U
// lands in V at some time n <= horizon. Records the minimal hitting time per
// pair.
Verdict check_transitivity(const Schedule& f, const DetectorParams& params);

// Every quadruple (U1, U2, V1, V2) needs a common hitting time.
Verdict check_weak_mixing(const Schedule& f, const DetectorParams& params);

// Every pair needs a threshold K <= horizon/2 after which every time hits.
Verdict check_topological_mixing(const Schedule& f, const DetectorParams& params);

// Largest delta from delta_list such that every net ball expands past
// diameter delta at some time. Candidates must exceed the net ball diameter
// 2*epsilon, otherwise a ball would "expand" without growing. On the unit
// interval the diameter of shallow compositions (depth <= 12) is computed
// exactly from piece images; deeper times fall back to the sampled estimate.
Verdict check_sensitivity(const Schedule& f, const DetectorParams& params);

// As sensitivity, but expansion must hold at every time in [K, horizon] for
// some K <= horizon/2.
Verdict check_cofinite_sensitivity(const Schedule& f, const DetectorParams& params);

// As sensitivity, but gaps between expansion times (including the lead-in
// and the tail out to the horizon) must stay <= gap_bound.
Verdict check_syndetic_sensitivity(const Schedule& f, const DetectorParams& params);

// For each epsilon in {1/4, 1/8, 1/16}, searches for a surviving modulus
// delta among {d in delta_list : d <= eps} plus eps/2 and eps/4: no grid
// pair closer than delta may drift eps apart within the horizon. Refuted
// when some epsilon level kills every candidate.
Verdict check_equicontinuity(const Schedule& f, const DetectorParams& params);

// Witnessed iff min over n <= horizon of d(evolve(x), evolve(y)) < tol;
// otherwise reports the minimum as a lower-bound estimate.
Verdict check_proximal(const Schedule& f, const Point& x, const Point& y, const DetectorParams& params);

// Every grid seed's orbit must pass within epsilon_net of every net ball
// center; Refuted by the first seed/ball miss.
Verdict check_minimality(const Schedule& f, const DetectorParams& params);

// Verifies d(evolve(period*k, p), p) < tol for k = 1..reps.
Verdict check_periodic_point(const Schedule& f, const Point& p, long period, long reps, double tol);

// True iff every map in the first `prefix_bound` indices and every tail
// generator is feeble open; exact for all supported schedule forms.
bool family_is_feeble_open(const Schedule& f, long prefix_bound = 50);

}  // namespace nadyn
