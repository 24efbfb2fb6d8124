#pragma once

#include "nadyn/fixtures.hpp"
#include "nadyn/json_io.hpp"

namespace nadyn {

// One alteration/rearrangement step. Text form: "truncate:K", "insert:R:MAP"
// (MAP is a registered map name), "delete:K", "rearrange:P1,P2,...",
// "block_rearrange" (valid on the shift block family only; swaps in its
// alternating rearrangement).
struct TransformSpec {
  enum class Kind { Truncate, Insert, Delete, Rearrange, BlockRearrange };
  Kind kind = Kind::Truncate;
  long index = 0;
  std::optional<SelfMap> map;
  std::vector<long> perm;

  std::string str() const;
  static TransformSpec parse(const std::string& text, const Space& space);
  static TransformSpec from_json(const nlohmann::json& j, const Space& space);
};

Schedule apply_transform(const Schedule& f, const TransformSpec& t);

struct DetectorRequest {
  std::string property;
  DetectorParams params;
  std::optional<std::pair<Point, Point>> pair;  // proximality
  std::optional<Point> point;                   // periodic_point
  long period = 1;
  long reps = 8;
};

// transformations apply left to right; the report contains the base system
// plus one variant per prefix of the transformation list.
struct ScenarioConfig {
  std::string system_name;  // fixture name; empty when inline_system is set
  std::optional<Schedule> inline_system;
  std::vector<TransformSpec> transforms;
  std::vector<DetectorRequest> detectors;
  std::string output_path;

  static ScenarioConfig from_json(const nlohmann::json& j);
  const Schedule& base() const;
};

struct SystemReport {
  std::string name;
  Schedule schedule;
  // Aligned with the config's detector requests; a slot is empty when that
  // detector failed, in which case `failures` carries (request index,
  // message) and the report stays partial instead of aborting.
  std::vector<std::optional<Verdict>> verdicts;
  std::vector<std::pair<size_t, std::string>> failures;
};

struct ComparisonReport {
  std::vector<SystemReport> systems;
  nlohmann::json to_json() const;  // verdict tables + agreement matrix + provenance
};

ComparisonReport run_scenario(const ScenarioConfig& cfg);

// The pair-free detectors, in canonical order.
const std::vector<std::string>& suite_properties();
Verdict run_property(const std::string& property, const Schedule& f, const DetectorParams& params);

// Point literals for the CLI: interval "2/3" or "0.25"; circle "1/4pi" or
// raw radians "0.785"; shift "101@-1".
Point parse_point_literal(const Space& s, const std::string& text);

struct PaperCheck {
  std::string id;
  bool passed = false;
  std::vector<std::string> notes;  // one line per assertion, prefixed ok:/FAIL:
  nlohmann::json report;
};

// Pre-registered scenarios, one per catalogued truncation/rearrangement
// fact; each asserts its expected agreement/disagreement pattern.
const std::vector<std::string>& paper_check_ids();
PaperCheck verify_paper(const std::string& id);

}  // namespace nadyn
