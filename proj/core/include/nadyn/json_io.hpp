#pragma once

#include <nlohmann/json.hpp>

#include "nadyn/detectors.hpp"

namespace nadyn {

// Raised on malformed config or system descriptions; carries the offending
// field path.
struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string field_, const std::string& what)
      : std::runtime_error("config field '" + field_ + "': " + what), field(std::move(field_)) {}
};

nlohmann::json space_to_json(const Space& s);
Space space_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

// Maps serialize with rational-string coefficients so configs stay exact,
// e.g. {"type":"piecewise","breakpoints":["0","1/2","1"],"pieces":[["0","2"],["2","-2"]]}.
nlohmann::json map_to_json(const SelfMap& f);
SelfMap map_from_json(const nlohmann::json& j, const Space& s);

// Inline systems: {"space": {...}, "type": "eventually_constant" |
// "periodic" | "shift_blocks" | "shift_alternating", ...}.
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const DetectorParams& p);
DetectorParams params_from_json(const nlohmann::json& j, const DetectorParams& defaults);

nlohmann::json verdict_to_json(const Verdict& v);

// FNV-1a over the canonical schedule serialization; reports carry it so a
// verdict can be re-run against the exact same system.
std::string schedule_digest(const Schedule& f);

}  // namespace nadyn
