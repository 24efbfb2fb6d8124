#include "nadyn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace nadyn {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Transforms

std::string TransformSpec::str() const {
  switch (kind) {
    case Kind::Truncate: return "truncate:" + std::to_string(index);
    case Kind::Insert: return "insert:" + std::to_string(index) + ":" + (map ? map->label() : "?");
    case Kind::Delete: return "delete:" + std::to_string(index);
    case Kind::Rearrange: {
      std::string s = "rearrange:";
      for (size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i]);
      return s;
    }
    case Kind::BlockRearrange: return "block_rearrange";
  }
  return "?";
}

TransformSpec TransformSpec::parse(const std::string& text, const Space& space) {
  (void)space;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw ConfigError("transform", "empty transform");
  TransformSpec t;
  auto want_index = [&](const char* what) {
    if (parts.size() < 2) throw ConfigError("transform", std::string(what) + " needs an index");
    try {
      t.index = std::stol(parts[1]);
    } catch (...) {
      throw ConfigError("transform", std::string(what) + ": bad index '" + parts[1] + "'");
    }
  };
  if (parts[0] == "truncate") {
    t.kind = Kind::Truncate;
    want_index("truncate");
  } else if (parts[0] == "delete") {
    t.kind = Kind::Delete;
    want_index("delete");
  } else if (parts[0] == "insert") {
    t.kind = Kind::Insert;
    want_index("insert");
    if (parts.size() < 3) throw ConfigError("transform", "insert needs a map name: insert:R:NAME");
    try {
      t.map = named_map(parts[2]);
    } catch (const UnknownFixture& e) {
      throw ConfigError("transform", e.what());
    }
  } else if (parts[0] == "rearrange") {
    t.kind = Kind::Rearrange;
    if (parts.size() < 2) throw ConfigError("transform", "rearrange needs a permutation: rearrange:2,1");
    std::stringstream ps(parts[1]);
    std::string num;
    while (std::getline(ps, num, ',')) {
      try {
        t.perm.push_back(std::stol(num));
      } catch (...) {
        throw ConfigError("transform", "bad permutation entry '" + num + "'");
      }
    }
  } else if (parts[0] == "block_rearrange") {
    t.kind = Kind::BlockRearrange;
  } else {
    throw ConfigError("transform", "unknown transform '" + parts[0] + "'");
  }
  return t;
}

TransformSpec TransformSpec::from_json(const json& j, const Space& space) {
  if (j.is_string()) return parse(j.get<std::string>(), space);
  if (!j.is_object() || !j.contains("op")) throw ConfigError("transformations", "expected {\"op\": ...}");
  std::string op = j["op"].get<std::string>();
  TransformSpec t;
  if (op == "truncate") {
    t.kind = Kind::Truncate;
    t.index = j.at("k").get<long>();
  } else if (op == "delete") {
    t.kind = Kind::Delete;
    t.index = j.at("k").get<long>();
  } else if (op == "insert") {
    t.kind = Kind::Insert;
    t.index = j.at("r").get<long>();
    const json& m = j.at("map");
    if (m.is_string())
      t.map = named_map(m.get<std::string>());
    else
      t.map = map_from_json(m, space);
  } else if (op == "rearrange") {
    t.kind = Kind::Rearrange;
    t.perm = j.at("perm").get<std::vector<long>>();
  } else if (op == "block_rearrange") {
    t.kind = Kind::BlockRearrange;
  } else {
    throw ConfigError("transformations.op", "unknown op '" + op + "'");
  }
  return t;
}

Schedule apply_transform(const Schedule& f, const TransformSpec& t) {
  switch (t.kind) {
    case TransformSpec::Kind::Truncate:
      return f.truncated(t.index);
    case TransformSpec::Kind::Insert:
      return f.with_insertion(t.index, *t.map);
    case TransformSpec::Kind::Delete:
      return f.with_deletion(t.index);
    case TransformSpec::Kind::Rearrange:
      return f.with_rearrangement(t.perm);
    case TransformSpec::Kind::BlockRearrange: {
      if (f.space().kind() != SpaceKind::BinaryShift)
        throw ConfigError("transform", "block_rearrange applies to the shift block family");
      Schedule blocks = Schedule::shift_blocks(f.space());
      for (long i = 1; i <= 12; ++i)
        if (!(f.at(i) == blocks.at(i)))
          throw ConfigError("transform", "block_rearrange applies to the shift block family");
      return Schedule::shift_alternating(f.space());
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Properties

const std::vector<std::string>& suite_properties() {
  static const std::vector<std::string> props{
      "transitivity",         "weak_mixing",          "topological_mixing",
      "sensitivity",          "cofinite_sensitivity", "syndetic_sensitivity",
      "equicontinuity",       "minimality"};
  return props;
}

Verdict run_property(const std::string& property, const Schedule& f, const DetectorParams& params) {
  if (property == "transitivity") return check_transitivity(f, params);
  if (property == "weak_mixing") return check_weak_mixing(f, params);
  if (property == "topological_mixing") return check_topological_mixing(f, params);
  if (property == "sensitivity") return check_sensitivity(f, params);
  if (property == "cofinite_sensitivity") return check_cofinite_sensitivity(f, params);
  if (property == "syndetic_sensitivity") return check_syndetic_sensitivity(f, params);
  if (property == "equicontinuity") return check_equicontinuity(f, params);
  if (property == "minimality") return check_minimality(f, params);
  std::string known;
  for (const auto& p : suite_properties()) known += (known.empty() ? "" : ", ") + p;
  throw ConfigError("property", "unknown property '" + property +
                                    "'; pair-free properties: " + known +
                                    "; pair properties: proximality, periodic_point");
}

Point parse_point_literal(const Space& s, const std::string& text) {
  switch (s.kind()) {
    case SpaceKind::UnitInterval: {
      if (auto r = Rational::from_string(text)) return Point::interval(*r);
      try {
        return Point::interval(std::stod(text));
      } catch (const std::exception&) {
        throw ConfigError("point", "bad interval coordinate '" + text + "'");
      }
    }
    case SpaceKind::Circle: {
      if (text.size() > 2 && text.substr(text.size() - 2) == "pi") {
        auto r = Rational::from_string(text.substr(0, text.size() - 2));
        if (!r) throw ConfigError("point", "bad angle '" + text + "' (want e.g. \"1/4pi\")");
        return Point::circle_over_pi(*r);
      }
      try {
        return Point::circle(std::stod(text));
      } catch (const std::exception&) {
        throw ConfigError("point", "bad angle '" + text + "'");
      }
    }
    case SpaceKind::BinaryShift: {
      auto w = Word::parse(text);
      if (!w) throw ConfigError("point", "bad word literal '" + text + "' (want e.g. \"101@-1\")");
      return Point::shift(s, *w);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Scenarios

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  int version = j.value("schema_version", 1);
  if (version != 1) throw ConfigError("schema_version", "only schema_version 1 is supported");
  if (!j.contains("system")) throw ConfigError("system", "missing");
  ScenarioConfig cfg;
  if (j["system"].is_string()) {
    cfg.system_name = j["system"].get<std::string>();
    try {
      get_fixture(cfg.system_name);
    } catch (const UnknownFixture& e) {
      throw ConfigError("system", e.what());
    }
  } else {
    cfg.inline_system = schedule_from_json(j["system"]);
  }
  Space space = cfg.base().space();
  for (const json& t : j.value("transformations", json::array()))
    cfg.transforms.push_back(TransformSpec::from_json(t, space));
  DetectorParams defaults = DetectorParams::defaults_for(space);
  if (!j.contains("detectors")) throw ConfigError("detectors", "missing");
  for (const json& d : j["detectors"]) {
    DetectorRequest req;
    if (d.is_string()) {
      req.property = d.get<std::string>();
      req.params = defaults;
    } else {
      req.property = d.value("property", "");
      if (req.property.empty()) throw ConfigError("detectors.property", "missing");
      req.params = params_from_json(d.contains("params") ? d["params"] : json(), defaults);
      if (d.contains("pair")) {
        const json& pr = d["pair"];
        if (!pr.is_array() || pr.size() != 2) throw ConfigError("detectors.pair", "expected [x, y]");
        auto parse_pt = [&](const json& p) {
          return p.is_string() ? parse_point_literal(space, p.get<std::string>()) : point_from_json(p);
        };
        req.pair = {parse_pt(pr[0]), parse_pt(pr[1])};
      }
      if (d.contains("point")) {
        const json& p = d["point"];
        req.point = p.is_string() ? parse_point_literal(space, p.get<std::string>()) : point_from_json(p);
        req.period = d.value("period", 1L);
        req.reps = d.value("reps", 8L);
      }
    }
    cfg.detectors.push_back(std::move(req));
  }
  cfg.output_path = j.value("output", "");
  return cfg;
}

const Schedule& ScenarioConfig::base() const {
  if (inline_system) return *inline_system;
  return get_fixture(system_name).schedule;
}

namespace {
Verdict run_request(const Schedule& f, const DetectorRequest& req) {
  if (req.property == "proximality") {
    if (!req.pair) throw ConfigError("detectors.pair", "proximality needs a pair of points");
    return check_proximal(f, req.pair->first, req.pair->second, req.params);
  }
  if (req.property == "periodic_point") {
    if (!req.point) throw ConfigError("detectors.point", "periodic_point needs a point");
    return check_periodic_point(f, *req.point, req.period, req.reps, req.params.tol);
  }
  return run_property(req.property, f, req.params);
}
}  // namespace

ComparisonReport run_scenario(const ScenarioConfig& cfg) {
  ComparisonReport report;
  std::string base_name = cfg.system_name.empty() ? "inline" : cfg.system_name;
  report.systems.push_back({base_name, cfg.base(), {}});
  Schedule current = cfg.base();
  std::string name = base_name;
  for (const TransformSpec& t : cfg.transforms) {
    current = apply_transform(current, t);
    name += "+" + t.str();
    report.systems.push_back({name, current, {}});
  }
  for (SystemReport& sys : report.systems)
    for (size_t k = 0; k < cfg.detectors.size(); ++k) {
      const DetectorRequest& req = cfg.detectors[k];
      try {
        sys.verdicts.push_back(run_request(sys.schedule, req));
      } catch (const ConfigError&) {
        throw;  // malformed requests abort; only detector-level failures stay partial
      } catch (const std::exception& e) {
        sys.verdicts.push_back(std::nullopt);
        sys.failures.emplace_back(k, req.property + ": " + e.what());
      }
    }
  return report;
}

json ComparisonReport::to_json() const {
  json systems_json = json::array();
  for (const SystemReport& sys : systems) {
    json verdicts = json::array();
    for (const auto& v : sys.verdicts) verdicts.push_back(v ? verdict_to_json(*v) : json());
    json failures = json::array();
    for (const auto& [k, message] : sys.failures)
      failures.push_back(json{{"request", k}, {"error", message}});
    json entry{{"name", sys.name},
               {"schedule", sys.schedule.describe()},
               {"digest", schedule_digest(sys.schedule)},
               {"verdicts", verdicts}};
    if (!failures.empty()) entry["failures"] = failures;
    systems_json.push_back(std::move(entry));
  }
  json agreement = json::array();
  for (size_t a = 0; a < systems.size(); ++a)
    for (size_t b = a + 1; b < systems.size(); ++b)
      for (size_t k = 0; k < systems[a].verdicts.size(); ++k) {
        const auto& va = systems[a].verdicts[k];
        const auto& vb = systems[b].verdicts[k];
        json entry{{"a", systems[a].name}, {"b", systems[b].name}};
        if (!va || !vb) {
          entry["property"] = va ? va->property : (vb ? vb->property : "?");
          entry["error"] = true;
        } else {
          entry["property"] = va->property;
          entry["status_agree"] = va->status == vb->status;
          if (va->delta() || vb->delta())
            entry["delta_agree"] = va->delta().has_value() == vb->delta().has_value() &&
                                   (!va->delta() || *va->delta() == *vb->delta());
        }
        agreement.push_back(entry);
      }
  json provenance{{"tool", "nadyn"}, {"version", "0.1.0"}, {"schema_version", 1}};
  return json{{"schema_version", 1},
              {"systems", systems_json},
              {"agreement", agreement},
              {"provenance", provenance}};
}

// ---------------------------------------------------------------------------
// The pre-registered check catalogue

namespace {

struct Checker {
  PaperCheck out;
  bool ok_so_far = true;
  explicit Checker(std::string id) { out.id = std::move(id); }
  void expect(bool ok, const std::string& what) {
    out.notes.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    ok_so_far = ok_so_far && ok;
  }
  PaperCheck finish(json report = json()) {
    out.passed = ok_so_far;
    out.report = std::move(report);
    return out;
  }
};

std::string status_str(const Verdict& v) { return to_string(v.status); }

// Verdicts for one property across a family and its first few truncations.
std::vector<Verdict> truncation_sweep(const Schedule& f, const std::string& property,
                                      const DetectorParams& params, const std::vector<long>& ks) {
  std::vector<Verdict> out{run_property(property, f, params)};
  for (long k : ks) out.push_back(run_property(property, f.truncated(k), params));
  return out;
}

bool all_same_status(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](const Verdict& v) { return v.status == vs.front().status; });
}

json sweep_json(const std::vector<Verdict>& vs) {
  json arr = json::array();
  for (const Verdict& v : vs) arr.push_back(verdict_to_json(v));
  return arr;
}

PaperCheck check_minimality_prop() {
  Checker c("minimality-prop");
  const FixtureEntry& rot = get_fixture("rotation_minimal");
  DetectorParams params = DetectorParams::defaults_for(Space::circle());
  params.epsilon_net = kPi / 8;
  params.horizon = 128;
  auto sweep = truncation_sweep(rot.schedule, "minimality", params, {1, 2, 3});
  c.expect(sweep.front().status == VerdictStatus::Witnessed, "rotation minimality witnessed at scale");
  c.expect(all_same_status(sweep), "minimality verdict stable under truncations 1..3");
  Verdict ident = run_property("minimality", get_fixture("identity_autonomous").schedule,
                               DetectorParams::defaults_for(Space::unit_interval()));
  c.expect(ident.status == VerdictStatus::Refuted, "identity system refuted (orbit of any p is {p})");
  return c.finish(json{{"rotation", sweep_json(sweep)}, {"identity", verdict_to_json(ident)}});
}

PaperCheck check_equicontinuity_prop() {
  Checker c("equicontinuity-prop");
  Space shift = get_fixture("shift_alternating").schedule.space();
  DetectorParams ps = DetectorParams::defaults_for(shift);
  auto alt = truncation_sweep(get_fixture("shift_alternating").schedule, "equicontinuity", ps, {1, 2, 3});
  c.expect(alt.front().status == VerdictStatus::Witnessed, "alternating shifts equicontinuous at scale");
  c.expect(all_same_status(alt), "equicontinuity verdict stable under truncations 1..3");
  DetectorParams pi = DetectorParams::defaults_for(Space::unit_interval());
  auto tent = truncation_sweep(get_fixture("tent_autonomous").schedule, "equicontinuity", pi, {1, 2, 3});
  c.expect(tent.front().status == VerdictStatus::Refuted, "tent equicontinuity refuted by a grid pair");
  c.expect(all_same_status(tent), "tent refutation stable under truncations 1..3");
  return c.finish(json{{"alternating", sweep_json(alt)}, {"tent", sweep_json(tent)}});
}

PaperCheck check_prox_prop() {
  Checker c("prox-prop");
  const Schedule& f = get_fixture("commuting_rotations").schedule;
  DetectorParams params = DetectorParams::defaults_for(Space::circle());
  std::vector<Point> grid = space_grid(Space::circle(), 8);
  json table = json::array();
  bool all_agree = true;
  for (size_t i = 0; i < grid.size(); i += 2)
    for (size_t j = i; j < grid.size(); j += 3) {
      Verdict base = check_proximal(f, grid[i], grid[j], params);
      bool agree = true;
      for (long k : {1L, 2L, 3L}) {
        Verdict trunc = check_proximal(f.truncated(k), grid[i], grid[j], params);
        agree = agree && trunc.status == base.status;
      }
      all_agree = all_agree && agree;
      table.push_back(json{{"x", point_to_json(grid[i])},
                           {"y", point_to_json(grid[j])},
                           {"status", status_str(base)},
                           {"stable", agree}});
    }
  c.expect(all_agree,
           "commuting bijective family: proximality verdicts agree between the family and its truncations");
  return c.finish(json{{"pairs", table}});
}

PaperCheck check_prox1() {
  Checker c("prox1");
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  params.horizon = 200;
  const Schedule& f = get_fixture("prox1").schedule;
  Point zero = Point::interval(Rational(0));
  Point one = Point::interval(Rational(1));
  Verdict full = check_proximal(f, zero, one, params);
  Verdict trunc = check_proximal(f.truncated(1), zero, one, params);
  double min_d = full.evidence["min_distance"].get<double>();
  c.expect(full.status == VerdictStatus::NoWitnessAtScale, "pair (0,1) not proximal for the full family");
  c.expect(std::fabs(min_d - 2.0 / 3.0) < 1e-12,
           "orbit distance pinned at 2/3 for 200 steps (got " + std::to_string(min_d) + ")");
  c.expect(trunc.status == VerdictStatus::Witnessed &&
               trunc.evidence["argmin"].get<long>() == 1,
           "pair (0,1) proximal for the truncated family at n=1");
  // Converse direction via the companion head: {0, 2/3} proximal only for
  // the full family.
  const Schedule& h = get_fixture("prox1_h").schedule;
  Point two_thirds = Point::interval(Rational(2, 3));
  Verdict h_full = check_proximal(h, zero, two_thirds, params);
  Verdict h_trunc = check_proximal(h.truncated(1), zero, two_thirds, params);
  c.expect(h_full.status == VerdictStatus::Witnessed, "pair (0,2/3) proximal for the companion family");
  c.expect(h_trunc.status == VerdictStatus::NoWitnessAtScale,
           "pair (0,2/3) not proximal for its truncation");
  return c.finish(json{{"full", verdict_to_json(full)},
                       {"truncated", verdict_to_json(trunc)},
                       {"companion_full", verdict_to_json(h_full)},
                       {"companion_truncated", verdict_to_json(h_trunc)}});
}

PaperCheck check_prox2() {
  Checker c("prox2");
  DetectorParams params = DetectorParams::defaults_for(Space::circle());
  const Schedule& f = get_fixture("prox2").schedule;
  Point a = Point::circle_over_pi(Rational(1, 4));
  Point b = Point::circle_over_pi(Rational(1, 2));
  Verdict full = check_proximal(f, a, b, params);
  Verdict trunc = check_proximal(f.truncated(1), a, b, params);
  c.expect(full.status == VerdictStatus::Witnessed,
           "interior pair (pi/4, pi/2) proximal within the horizon (quadratic convergence to pi)");
  double min_d = trunc.evidence["min_distance"].get<double>();
  c.expect(trunc.status == VerdictStatus::NoWitnessAtScale && std::fabs(min_d - kPi / 4) < 1e-12,
           "truncated system pins the pair at distance pi/4 (interior of [0,pi] is fixed)");
  return c.finish(json{{"full", verdict_to_json(full)}, {"truncated", verdict_to_json(trunc)}});
}

PaperCheck check_prox3() {
  Checker c("prox3");
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  params.horizon = 200;
  const Schedule& f = get_fixture("prox3").schedule;
  Point a = Point::interval(Rational(9, 10));
  Point b = Point::interval(Rational(1));
  Verdict full = check_proximal(f, a, b, params);
  Verdict trunc = check_proximal(f.truncated(1), a, b, params);
  c.expect(full.status == VerdictStatus::Witnessed && full.evidence["argmin"].get<long>() == 1,
           "pair (0.9, 1) collapses at n=1 (the head sends [7/8,1] to 1)");
  double min_d = trunc.evidence["min_distance"].get<double>();
  c.expect(trunc.status == VerdictStatus::NoWitnessAtScale && std::fabs(min_d - 0.1) < 1e-12,
           "every truncated system pins the pair at distance 0.1");
  return c.finish(json{{"full", verdict_to_json(full)}, {"truncated", verdict_to_json(trunc)}});
}

PaperCheck check_transitivity_prop() {
  Checker c("transitivity-prop");
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  for (const char* name : {"tent_autonomous", "prox1"}) {
    auto sweep = truncation_sweep(get_fixture(name).schedule, "transitivity", params, {1, 2, 3});
    c.expect(sweep.front().status == VerdictStatus::Witnessed,
             std::string(name) + " transitive at scale");
    c.expect(all_same_status(sweep), std::string(name) + " transitivity stable under truncations 1..3");
  }
  return c.finish();
}

PaperCheck check_mixing_cor() {
  Checker c("mixing-cor");
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  for (const char* prop : {"weak_mixing", "topological_mixing"}) {
    auto sweep = truncation_sweep(get_fixture("tent_autonomous").schedule, prop, params, {1, 2, 3});
    c.expect(sweep.front().status == VerdictStatus::Witnessed, std::string(prop) + " witnessed for tent");
    c.expect(all_same_status(sweep), std::string(prop) + " stable under truncations 1..3");
  }
  return c.finish();
}

PaperCheck check_sens_example() {
  Checker c("sens-example");
  ScenarioConfig cfg;
  cfg.system_name = "sens";
  cfg.transforms.push_back(TransformSpec::parse("truncate:1", Space::unit_interval()));
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  for (const char* prop : {"transitivity", "weak_mixing", "topological_mixing", "sensitivity"})
    cfg.detectors.push_back({prop, params, std::nullopt, std::nullopt, 1, 8});
  ComparisonReport report = run_scenario(cfg);
  const auto& full = report.systems[0].verdicts;
  const auto& trunc = report.systems[1].verdicts;
  for (size_t i = 0; i < full.size(); ++i) {
    c.expect(full[i]->status == VerdictStatus::NoWitnessAtScale,
             full[i]->property + " shows no witness for the full family");
    c.expect(trunc[i]->status == VerdictStatus::Witnessed,
             trunc[i]->property + " witnessed for the truncated family");
  }
  c.expect(trunc.back()->delta() && *trunc.back()->delta() == 0.5,
           "truncated sensitivity constant is 1/2 from the default ladder");
  return c.finish(report.to_json());
}

PaperCheck check_sensitivity_prop() {
  Checker c("sensitivity-prop");
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  for (const char* name : {"tent_autonomous", "prox1"}) {
    auto sweep = truncation_sweep(get_fixture(name).schedule, "sensitivity", params, {1, 2, 3});
    c.expect(sweep.front().status == VerdictStatus::Witnessed, std::string(name) + " sensitive at scale");
    c.expect(all_same_status(sweep), std::string(name) + " sensitivity stable under truncations 1..3");
    bool deltas_match = true;
    for (const Verdict& v : sweep) deltas_match = deltas_match && v.delta() == sweep.front().delta();
    c.expect(deltas_match, std::string(name) + " reports the same sensitivity constant at every truncation");
  }
  return c.finish();
}

PaperCheck check_syndetic_cor() {
  Checker c("syndetic-cor");
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  for (const char* prop : {"cofinite_sensitivity", "syndetic_sensitivity"}) {
    auto sweep = truncation_sweep(get_fixture("tent_autonomous").schedule, prop, params, {1, 2, 3});
    c.expect(sweep.front().status == VerdictStatus::Witnessed, std::string(prop) + " witnessed for tent");
    c.expect(all_same_status(sweep), std::string(prop) + " stable under truncations 1..3");
  }
  return c.finish();
}

PaperCheck check_rearrange_finite() {
  Checker c("rearrange-finite-cor");
  ScenarioConfig cfg;
  cfg.system_name = "prox1";
  cfg.transforms.push_back(TransformSpec::parse("rearrange:2,1", Space::unit_interval()));
  DetectorParams params = DetectorParams::defaults_for(Space::unit_interval());
  for (const std::string& prop : suite_properties())
    cfg.detectors.push_back({prop, params, std::nullopt, std::nullopt, 1, 8});
  ComparisonReport report = run_scenario(cfg);
  const auto& base = report.systems[0].verdicts;
  const auto& swapped = report.systems[1].verdicts;
  for (size_t i = 0; i < base.size(); ++i) {
    c.expect(base[i]->status == swapped[i]->status,
             base[i]->property + " agrees between the family and its finite rearrangement");
    if (base[i]->delta() || swapped[i]->delta())
      c.expect(base[i]->delta() == swapped[i]->delta(),
               base[i]->property + " keeps its sensitivity constant under the rearrangement");
  }
  return c.finish(report.to_json());
}

PaperCheck check_rearrange_infinite() {
  Checker c("rearrange-infinite");
  Space shift = get_fixture("shift_block").schedule.space();
  const Schedule& blocks = get_fixture("shift_block").schedule;
  const Schedule& alternating = get_fixture("shift_alternating").schedule;

  DetectorParams sens = DetectorParams::defaults_for(shift);
  Verdict f_sens = check_sensitivity(blocks, sens);
  Verdict g_sens = check_sensitivity(alternating, sens);
  c.expect(f_sens.status == VerdictStatus::Witnessed && f_sens.delta() && *f_sens.delta() >= 0.5,
           "block family sensitive with constant >= 1/2 at cylinder params");
  c.expect(g_sens.status == VerdictStatus::NoWitnessAtScale,
           "alternating rearrangement shows no sensitivity witness");

  Verdict f_eq = check_equicontinuity(blocks, sens);
  Verdict g_eq = check_equicontinuity(alternating, sens);
  c.expect(f_eq.status == VerdictStatus::Refuted, "block family equicontinuity refuted");
  c.expect(g_eq.status == VerdictStatus::Witnessed, "alternating rearrangement equicontinuous at scale");

  bool identity_returns = true;
  std::vector<Word> words{Word::single_one(0), *Word::parse("1101@-2"), Word::zeros()};
  for (long n : {1L, 2L, 3L}) {
    long steps = n * (n + 1);
    for (const Word& w : words) {
      Point start = Point::shift(shift, w);
      identity_returns = identity_returns && evolve(blocks, steps, start).word() == w;
    }
  }
  c.expect(identity_returns, "block family returns to the identity at steps 2, 6, 12 exactly");
  c.expect(f_sens.status != g_sens.status && f_eq.status != g_eq.status,
           "disagreement between the family and its infinite rearrangement confirmed");
  return c.finish(json{{"block_sensitivity", verdict_to_json(f_sens)},
                       {"alternating_sensitivity", verdict_to_json(g_sens)},
                       {"block_equicontinuity", verdict_to_json(f_eq)},
                       {"alternating_equicontinuity", verdict_to_json(g_eq)}});
}

using CheckFn = PaperCheck (*)();

const std::vector<std::pair<std::string, CheckFn>>& catalogue() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"minimality-prop", check_minimality_prop},
      {"equicontinuity-prop", check_equicontinuity_prop},
      {"prox-prop", check_prox_prop},
      {"prox1", check_prox1},
      {"prox2", check_prox2},
      {"prox3", check_prox3},
      {"transitivity-prop", check_transitivity_prop},
      {"mixing-cor", check_mixing_cor},
      {"sens-example", check_sens_example},
      {"sensitivity-prop", check_sensitivity_prop},
      {"syndetic-cor", check_syndetic_cor},
      {"rearrange-finite-cor", check_rearrange_finite},
      {"rearrange-infinite", check_rearrange_infinite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& paper_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, _] : catalogue()) v.push_back(id);
    return v;
  }();
  return ids;
}

PaperCheck verify_paper(const std::string& id) {
  for (const auto& [name, fn] : catalogue())
    if (name == id) return fn();
  std::string known;
  for (const auto& name : paper_check_ids()) known += (known.empty() ? "" : ", ") + name;
  throw ConfigError("verify-paper", "unknown id '" + id + "'; known ids: " + known);
}

}  // namespace nadyn
