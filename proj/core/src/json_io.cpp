#include "nadyn/json_io.hpp"

#include <cstdio>

namespace nadyn {

using nlohmann::json;

json space_to_json(const Space& s) {
  json j{{"kind", to_string(s.kind())}};
  if (s.kind() == SpaceKind::BinaryShift) j["window"] = s.window();
  return j;
}

Space space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("space", "expected {\"kind\": ...}");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "unit_interval") return Space::unit_interval();
  if (kind == "circle") return Space::circle();
  if (kind == "binary_shift") {
    int w = j.value("window", 16);
    return Space::binary_shift(w);
  }
  throw ConfigError("space.kind", "unknown space '" + kind + "'");
}

json point_to_json(const Point& p) {
  switch (p.space().kind()) {
    case SpaceKind::UnitInterval: {
      json j{{"space", "unit_interval"}, {"x", p.coord()}};
      if (p.exact()) j["exact"] = p.exact()->str();
      return j;
    }
    case SpaceKind::Circle: {
      json j{{"space", "circle"}, {"angle", p.coord()}};
      if (p.exact()) j["angle_over_pi"] = p.exact()->str();
      return j;
    }
    case SpaceKind::BinaryShift:
      return json{{"space", "binary_shift"},
                  {"window", p.space().window()},
                  {"word", p.word().str()},
                  {"shifts", p.word().shift_count()}};
  }
  return json();
}

Point point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space")) throw ConfigError("point", "expected {\"space\": ...}");
  std::string kind = j["space"].get<std::string>();
  if (kind == "unit_interval") {
    if (j.contains("exact")) {
      auto r = Rational::from_string(j["exact"].get<std::string>());
      if (!r) throw ConfigError("point.exact", "bad rational");
      return Point::interval(*r);
    }
    return Point::interval(j.at("x").get<double>());
  }
  if (kind == "circle") {
    if (j.contains("angle_over_pi")) {
      auto r = Rational::from_string(j["angle_over_pi"].get<std::string>());
      if (!r) throw ConfigError("point.angle_over_pi", "bad rational");
      return Point::circle_over_pi(*r);
    }
    return Point::circle(j.at("angle").get<double>());
  }
  if (kind == "binary_shift") {
    auto w = Word::parse(j.at("word").get<std::string>());
    if (!w) throw ConfigError("point.word", "bad word literal (want e.g. \"101@-1\")");
    return Point::shift(Space::binary_shift(j.value("window", 16)), *w);
  }
  throw ConfigError("point.space", "unknown space '" + kind + "'");
}

namespace {
Rational parse_rational_field(const json& j, const std::string& field) {
  std::optional<Rational> r;
  if (j.is_string())
    r = Rational::from_string(j.get<std::string>());
  else if (j.is_number_integer())
    r = Rational(j.get<long long>());
  else if (j.is_number())
    r = Rational::from_double(j.get<double>());
  if (!r) throw ConfigError(field, "expected a rational like \"2/3\"");
  return *r;
}
}  // namespace

json map_to_json(const SelfMap& f) {
  json j{{"type", to_string(f.kind())}};
  if (!f.label().empty()) j["label"] = f.label();
  switch (f.kind()) {
    case MapKind::Piecewise: {
      json breaks = json::array();
      for (const Rational& b : f.poly().breakpoints()) breaks.push_back(b.str());
      json pieces = json::array();
      for (const PolyPiece& piece : f.poly().pieces()) {
        json coeffs = json::array({piece.c0.str()});
        if (piece.degree() >= 1 || !piece.c1.is_zero()) coeffs.push_back(piece.c1.str());
        if (piece.degree() == 2) coeffs.push_back(piece.c2.str());
        pieces.push_back(coeffs);
      }
      j["breakpoints"] = breaks;
      j["pieces"] = pieces;
      break;
    }
    case MapKind::Rotation:
      j["radians"] = f.rotation_angle();
      break;
    default:
      break;
  }
  return j;
}

SelfMap map_from_json(const json& j, const Space& s) {
  if (!j.is_object() || !j.contains("type")) throw ConfigError("map", "expected {\"type\": ...}");
  std::string type = j["type"].get<std::string>();
  std::string label = j.value("label", "");
  if (type == "identity") return SelfMap::identity(s);
  if (type == "shift_left") return SelfMap::shift_left(s);
  if (type == "shift_right") return SelfMap::shift_right(s);
  if (type == "rotation") {
    if (s.kind() != SpaceKind::Circle) throw ConfigError("map", "rotation needs the circle");
    return SelfMap::rotation(j.at("radians").get<double>(), label);
  }
  if (type == "piecewise") {
    std::vector<Rational> breaks;
    for (const json& b : j.at("breakpoints")) breaks.push_back(parse_rational_field(b, "map.breakpoints"));
    std::vector<std::vector<Rational>> pieces;
    for (const json& piece : j.at("pieces")) {
      std::vector<Rational> coeffs;
      for (const json& c : piece) coeffs.push_back(parse_rational_field(c, "map.pieces"));
      pieces.push_back(std::move(coeffs));
    }
    try {
      return SelfMap::piecewise(s, std::move(breaks), std::move(pieces), label);
    } catch (const MapConstructionError& e) {
      throw ConfigError("map.pieces", e.what());
    }
  }
  throw ConfigError("map.type", "unknown map type '" + type + "'");
}

Schedule schedule_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("system", "expected an object");
  Space s = space_from_json(j.at("space"));
  std::string type = j.value("type", "");
  if (type == "eventually_constant") {
    std::vector<SelfMap> prefix;
    for (const json& m : j.value("prefix", json::array())) prefix.push_back(map_from_json(m, s));
    if (!j.contains("tail")) throw ConfigError("system.tail", "eventually_constant needs a tail map");
    return Schedule::eventually_constant(std::move(prefix), map_from_json(j["tail"], s));
  }
  if (type == "periodic") {
    std::vector<SelfMap> cycle;
    for (const json& m : j.value("cycle", json::array())) cycle.push_back(map_from_json(m, s));
    if (cycle.empty()) throw ConfigError("system.cycle", "periodic needs a non-empty cycle");
    return Schedule::periodic(std::move(cycle));
  }
  if (type == "shift_blocks") return Schedule::shift_blocks(s);
  if (type == "shift_alternating") return Schedule::shift_alternating(s);
  throw ConfigError("system.type", "unknown schedule type '" + type + "'");
}

json params_to_json(const DetectorParams& p) {
  return json{{"epsilon_net", p.epsilon_net}, {"horizon", p.horizon},
              {"grid", p.grid_resolution},   {"delta_list", p.delta_list},
              {"tol", p.tol},                {"gap_bound", p.gap_bound}};
}

DetectorParams params_from_json(const json& j, const DetectorParams& defaults) {
  DetectorParams p = defaults;
  if (!j.is_object()) {
    if (j.is_null()) return p;
    throw ConfigError("params", "expected an object");
  }
  p.epsilon_net = j.value("epsilon_net", p.epsilon_net);
  p.horizon = j.value("horizon", p.horizon);
  p.grid_resolution = j.value("grid", p.grid_resolution);
  if (j.contains("delta_list")) p.delta_list = j["delta_list"].get<std::vector<double>>();
  p.tol = j.value("tol", p.tol);
  p.gap_bound = j.value("gap_bound", p.gap_bound);
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("params", e.what());
  }
  return p;
}

json verdict_to_json(const Verdict& v) {
  return json{{"property", v.property},
              {"status", to_string(v.status)},
              {"params", params_to_json(v.params)},
              {"evidence", v.evidence}};
}

std::string schedule_digest(const Schedule& f) {
  // FNV-1a over the canonical serialization of the first 64 maps plus the
  // tail generators.
  std::string blob = space_to_json(f.space()).dump();
  for (long i = 1; i <= 64; ++i) blob += map_to_json(f.at(i)).dump();
  blob += "|tail:";
  for (const SelfMap& g : f.tail_generators()) blob += map_to_json(g).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : blob) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace nadyn
