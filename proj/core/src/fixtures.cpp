#include "nadyn/fixtures.hpp"

#include <map>

namespace nadyn {

namespace {

constexpr int kFixtureWindow = 16;  // roomy enough that no horizon-64/128 run truncates

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

struct Registry {
  std::map<std::string, SelfMap> maps;
  std::map<std::string, FixtureEntry> fixtures;
  std::vector<std::string> map_names;
  std::vector<std::string> fixture_names;

  Registry() {
    build_maps();
    build_fixtures();
    for (const auto& [name, _] : maps) map_names.push_back(name);
    for (const auto& [name, _] : fixtures) fixture_names.push_back(name);
  }

  void build_maps() {
    Space I = Space::unit_interval();
    Space C = Space::circle();
    Space S = Space::binary_shift(kFixtureWindow);

    auto add = [&](SelfMap m) { maps.emplace(m.label(), std::move(m)); };

    add(SelfMap::piecewise(I, {rat(0), rat(1, 2), rat(1)}, {{rat(0), rat(2)}, {rat(2), rat(-2)}}, "tent"));
    add(SelfMap::piecewise(I, {rat(0), rat(1, 2), rat(1)}, {{rat(0)}, {rat(-1), rat(2)}}, "sens_f"));
    add(SelfMap::piecewise(I, {rat(0), rat(1, 3), rat(2, 3), rat(1)},
                           {{rat(0), rat(3)}, {rat(2), rat(-3)}, {rat(-4, 3), rat(2)}}, "prox1_f"));
    add(SelfMap::piecewise(I, {rat(0), rat(2, 3), rat(1)},
                           {{rat(0), rat(3, 8)}, {rat(-5, 4), rat(9, 4)}}, "prox1_h"));
    add(SelfMap::piecewise(I, {rat(0), rat(1, 2), rat(7, 8), rat(1)},
                           {{rat(0), rat(1)}, {rat(-1, 6), rat(4, 3)}, {rat(1)}}, "prox3_f"));
    add(SelfMap::piecewise(I, {rat(0), rat(1, 4), rat(1, 2), rat(1)},
                           {{rat(1, 2), rat(-2)}, {rat(-1, 2), rat(2)}, {rat(0), rat(1)}}, "prox3_g"));
    // Circle maps in units of pi: f(theta) = theta + pi, and the map fixing
    // [0, pi] pointwise while pulling (pi, 2pi] quadratically onto pi.
    add(SelfMap::piecewise(C, {rat(0), rat(2)}, {{rat(1), rat(1)}}, "prox2_f"));
    add(SelfMap::piecewise(C, {rat(0), rat(1), rat(2)}, {{rat(0), rat(1)}, {rat(2), rat(-2), rat(1)}},
                           "prox2_g"));
    add(SelfMap::identity(I));
    add(SelfMap::rotation(1.0, "rot1"));
    add(SelfMap::rotation(0.5, "rot_half"));
    add(SelfMap::shift_left(S));
    add(SelfMap::shift_right(S));
  }

  const SelfMap& m(const std::string& name) const { return maps.at(name); }

  void build_fixtures() {
    Space S = Space::binary_shift(kFixtureWindow);
    DetectorParams di = DetectorParams::defaults_for(Space::unit_interval());
    DetectorParams dc = DetectorParams::defaults_for(Space::circle());
    DetectorParams ds = DetectorParams::defaults_for(S);

    DetectorParams ds_long = ds;  // far enough horizon to expose the growing expansion gaps
    ds_long.horizon = 128;
    DetectorParams dc_rot = dc;  // coarse net + long horizon for orbit-coverage checks
    dc_rot.epsilon_net = kPi / 8;
    dc_rot.horizon = 128;

    auto W = VerdictStatus::Witnessed;
    auto R = VerdictStatus::Refuted;
    auto N0 = VerdictStatus::NoWitnessAtScale;

    auto mixing_row = [](const DetectorParams& p, VerdictStatus trans, VerdictStatus wm,
                         VerdictStatus tm) {
      return std::vector<ExpectedVerdict>{{"transitivity", p, trans, std::nullopt},
                                          {"weak_mixing", p, wm, std::nullopt},
                                          {"topological_mixing", p, tm, std::nullopt}};
    };

    auto add = [&](FixtureEntry e) { fixtures.emplace(e.name, std::move(e)); };

    {
      FixtureEntry e{"tent_autonomous", Schedule::periodic({m("tent")}),
                     "autonomous tent baseline: every mixing and sensitivity notion at once", {}};
      e.expected = mixing_row(di, W, W, W);
      e.expected.push_back({"sensitivity", di, W, 0.5});
      e.expected.push_back({"cofinite_sensitivity", di, W, 0.5});
      e.expected.push_back({"syndetic_sensitivity", di, W, 0.5});
      e.expected.push_back({"equicontinuity", di, R, std::nullopt});
      e.expected.push_back({"minimality", di, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"identity_autonomous", Schedule::periodic({m("identity")}),
                     "frozen dynamics: nothing moves, so nothing mixes and nothing separates", {}};
      e.expected = mixing_row(di, N0, N0, N0);
      e.expected.push_back({"sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"cofinite_sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"syndetic_sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", di, W, std::nullopt});
      e.expected.push_back({"minimality", di, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"sens", Schedule::eventually_constant({m("sens_f")}, m("tent")),
                     "head map collapses [0,1/2] to a point; the tent tail alone is mixing but the "
                     "full system shows nothing at any scale",
                     {}};
      e.expected = mixing_row(di, N0, N0, N0);
      e.expected.push_back({"sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"cofinite_sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"syndetic_sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", di, R, std::nullopt});
      e.expected.push_back({"minimality", di, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"prox1", Schedule::eventually_constant({m("prox1_f")}, m("tent")),
                     "non-commuting head: (0,1) is proximal for every truncation but not for the "
                     "full family",
                     {}};
      e.expected = mixing_row(di, W, W, W);
      e.expected.push_back({"sensitivity", di, W, 0.5});
      e.expected.push_back({"equicontinuity", di, R, std::nullopt});
      e.expected.push_back({"minimality", di, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"prox1_h", Schedule::eventually_constant({m("prox1_h")}, m("tent")),
                     "companion head for the converse direction: {0, 2/3} proximal for the full "
                     "family only",
                     {}};
      e.expected = mixing_row(di, W, W, W);
      e.expected.push_back({"sensitivity", di, W, 0.5});
      add(std::move(e));
    }
    {
      FixtureEntry e{"prox2", Schedule::eventually_constant({m("prox2_f")}, m("prox2_g")),
                     "bijective, non-commuting circle pair: the half-turn feeds [0,pi] into the "
                     "basin of the superattracting fixed point at pi",
                     {}};
      e.expected = mixing_row(dc, N0, N0, N0);
      e.expected.push_back({"sensitivity", dc, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", dc, R, std::nullopt});
      e.expected.push_back({"minimality", dc, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"prox3", Schedule::eventually_constant({m("prox3_f")}, m("prox3_g")),
                     "commuting, non-injective pair: [7/8,1] collapses to 1 under the head and the "
                     "tail fixes it",
                     {}};
      e.expected = mixing_row(di, N0, N0, N0);
      e.expected.push_back({"sensitivity", di, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", di, R, std::nullopt});
      e.expected.push_back({"minimality", di, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"shift_block", Schedule::shift_blocks(S),
                     "quadratic blocks of shifts and inverse shifts: returns to the identity at "
                     "n(n+1) yet expands every cylinder in between",
                     {}};
      e.expected = mixing_row(ds, N0, N0, N0);
      e.expected.push_back({"sensitivity", ds, W, 0.5});
      e.expected.push_back({"cofinite_sensitivity", ds, N0, std::nullopt});
      e.expected.push_back({"syndetic_sensitivity", ds_long, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", ds, R, std::nullopt});
      e.expected.push_back({"minimality", ds, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"shift_alternating", Schedule::shift_alternating(S),
                     "infinite rearrangement of the block family: every orbit is {x, shifted x}", {}};
      e.expected = mixing_row(ds, N0, N0, N0);
      e.expected.push_back({"sensitivity", ds, N0, std::nullopt});
      e.expected.push_back({"cofinite_sensitivity", ds, N0, std::nullopt});
      e.expected.push_back({"syndetic_sensitivity", ds, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", ds, W, std::nullopt});
      e.expected.push_back({"minimality", ds, R, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"rotation_minimal", Schedule::periodic({m("rot1")}),
                     "rotation by 1 radian: minimal and equicontinuous baseline", {}};
      e.expected.push_back({"transitivity", dc_rot, W, std::nullopt});
      e.expected.push_back({"weak_mixing", dc, N0, std::nullopt});
      e.expected.push_back({"topological_mixing", dc, N0, std::nullopt});
      e.expected.push_back({"sensitivity", dc, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", dc, W, std::nullopt});
      e.expected.push_back({"minimality", dc_rot, W, std::nullopt});
      add(std::move(e));
    }
    {
      FixtureEntry e{"commuting_rotations", Schedule::periodic({m("rot1"), m("rot_half")}),
                     "two interleaved rotations: commuting bijective family for the proximality "
                     "transfer checks",
                     {}};
      e.expected.push_back({"sensitivity", dc, N0, std::nullopt});
      e.expected.push_back({"equicontinuity", dc, W, std::nullopt});
      e.expected.push_back({"minimality", dc_rot, W, std::nullopt});
      add(std::move(e));
    }
  }
};

const Registry& registry() {
  static const Registry r;
  return r;
}

}  // namespace

const FixtureEntry& get_fixture(const std::string& name) {
  const auto& fixtures = registry().fixtures;
  auto it = fixtures.find(name);
  if (it == fixtures.end()) {
    std::string known;
    for (const auto& n : registry().fixture_names) known += (known.empty() ? "" : ", ") + n;
    throw UnknownFixture("unknown fixture '" + name + "'; known fixtures: " + known);
  }
  return it->second;
}

const std::vector<std::string>& fixture_names() { return registry().fixture_names; }

const SelfMap& named_map(const std::string& name) {
  const auto& maps = registry().maps;
  auto it = maps.find(name);
  if (it == maps.end()) {
    std::string known;
    for (const auto& n : registry().map_names) known += (known.empty() ? "" : ", ") + n;
    throw UnknownFixture("unknown map '" + name + "'; known maps: " + known);
  }
  return it->second;
}

const std::vector<std::string>& named_map_names() { return registry().map_names; }

bool commuting_check(const SelfMap& f, const SelfMap& g, const std::vector<Point>& grid, double tol) {
  if (!(f.space() == g.space())) throw SpaceMismatch();
  for (const Point& p : grid)
    if (!(distance(apply(f, apply(g, p)), apply(g, apply(f, p))) < tol)) return false;
  return true;
}

}  // namespace nadyn
