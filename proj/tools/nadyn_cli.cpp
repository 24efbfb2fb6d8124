// Command-line front end: run one detector, compare a system against its
// alterations/rearrangements, replay the built-in check catalogue, or list the
// built-in systems. Everything is deterministic; there is no seed anywhere.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "nadyn/scenario.hpp"

namespace {

using nadyn::ConfigError;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitExpectationViolated = 1;
constexpr int kExitConfigError = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("file", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("file", "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_output(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ConfigError("out", "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

nadyn::Schedule resolve_system(const std::string& spec) {
  if (std::ifstream probe(spec); probe.good()) return nadyn::schedule_from_json(read_json_file(spec));
  return nadyn::get_fixture(spec).schedule;
}

std::vector<double> parse_delta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

int run_check(const std::string& system_spec, const std::string& property, const std::string& pair,
              const std::string& point, long period, long reps, const std::string& delta_list,
              double epsilon, long horizon, int grid, double tol, long gap, const std::string& out) {
  nadyn::Schedule system = resolve_system(system_spec);
  nadyn::DetectorParams params = nadyn::DetectorParams::defaults_for(system.space());
  if (epsilon > 0) params.epsilon_net = epsilon;
  if (horizon > 0) params.horizon = horizon;
  if (grid > 0) params.grid_resolution = grid;
  if (tol > 0) params.tol = tol;
  if (gap > 0) params.gap_bound = gap;
  if (!delta_list.empty()) params.delta_list = parse_delta_list(delta_list);
  params.validate();

  nadyn::Verdict verdict;
  if (property == "proximality") {
    size_t comma = pair.find(',');
    if (pair.empty() || comma == std::string::npos)
      throw ConfigError("pair", "proximality needs --pair \"x,y\"");
    verdict = nadyn::check_proximal(system, nadyn::parse_point_literal(system.space(), pair.substr(0, comma)),
                                    nadyn::parse_point_literal(system.space(), pair.substr(comma + 1)), params);
  } else if (property == "periodic_point") {
    if (point.empty()) throw ConfigError("point", "periodic_point needs --point");
    verdict = nadyn::check_periodic_point(system, nadyn::parse_point_literal(system.space(), point),
                                          period, reps, params.tol);
  } else {
    verdict = nadyn::run_property(property, system, params);
  }

  std::cout << property << " on " << system_spec << ": " << nadyn::to_string(verdict.status) << "\n";
  if (auto d = verdict.delta()) std::cout << "  sensitivity constant: " << *d << "\n";
  write_output(out, json{{"schema_version", 1},
                         {"system", system_spec},
                         {"digest", nadyn::schedule_digest(system)},
                         {"verdict", nadyn::verdict_to_json(verdict)}});
  return kExitOk;
}

int run_compare(const std::string& system_spec, const std::vector<std::string>& transforms,
                const std::string& suite, const std::string& out) {
  nadyn::ScenarioConfig cfg;
  if (std::ifstream probe(system_spec); probe.good()) {
    cfg.inline_system = nadyn::schedule_from_json(read_json_file(system_spec));
  } else {
    nadyn::get_fixture(system_spec);
    cfg.system_name = system_spec;
  }
  nadyn::Space space = cfg.base().space();
  for (const std::string& t : transforms) cfg.transforms.push_back(nadyn::TransformSpec::parse(t, space));

  std::vector<std::string> properties;
  if (suite == "all") {
    properties = nadyn::suite_properties();
  } else {
    std::stringstream ss(suite);
    std::string item;
    while (std::getline(ss, item, ',')) properties.push_back(item);
  }
  nadyn::DetectorParams params = nadyn::DetectorParams::defaults_for(space);
  for (const std::string& p : properties)
    cfg.detectors.push_back({p, params, std::nullopt, std::nullopt, 1, 8});

  nadyn::ComparisonReport report = nadyn::run_scenario(cfg);
  for (const auto& sys : report.systems) {
    std::cout << sys.name << ":\n";
    for (const auto& v : sys.verdicts) {
      if (!v) continue;
      std::cout << "  " << v->property << ": " << nadyn::to_string(v->status);
      if (auto d = v->delta()) std::cout << " (delta=" << *d << ")";
      std::cout << "\n";
    }
    for (const auto& [k, message] : sys.failures)
      std::cout << "  detector failure: " << message << "\n";
  }
  write_output(out, report.to_json());
  return kExitOk;
}

int run_verify(const std::string& id, const std::string& out, bool verbose) {
  std::vector<std::string> ids =
      id == "all" ? nadyn::paper_check_ids() : std::vector<std::string>{id};
  json results = json::array();
  bool all_passed = true;
  for (const std::string& check_id : ids) {
    nadyn::PaperCheck check = nadyn::verify_paper(check_id);
    all_passed = all_passed && check.passed;
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.id << "\n";
    for (const std::string& note : check.notes)
      if (verbose || !check.passed) std::cout << "    " << note << "\n";
    results.push_back(json{{"id", check.id}, {"passed", check.passed}, {"notes", check.notes},
                           {"report", check.report}});
  }
  write_output(out, json{{"schema_version", 1}, {"checks", results}});
  return all_passed ? kExitOk : kExitExpectationViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nadyn: witness search for non-autonomous dynamics under alteration and rearrangement"};
  app.require_subcommand(1);

  std::string system_spec, property, pair, point, delta_list, out, suite = "all", verify_id;
  std::vector<std::string> transforms;
  long period = 1, reps = 8, horizon = 0, gap = 0;
  int grid = 0;
  double epsilon = 0, tol = 0;
  bool verbose = false;

  CLI::App* check = app.add_subcommand("check", "run one detector on one system");
  check->add_option("--system", system_spec, "fixture name or system JSON file")->required();
  check->add_option("--property", property,
                    "transitivity | weak_mixing | topological_mixing | sensitivity | "
                    "cofinite_sensitivity | syndetic_sensitivity | equicontinuity | minimality | "
                    "proximality | periodic_point")
      ->required();
  check->add_option("--pair", pair, "proximality pair, e.g. \"0,1\" or \"1/4pi,1/2pi\" or \"1@0,0@0\"");
  check->add_option("--point", point, "periodic_point seed");
  check->add_option("--period", period, "periodic_point candidate period");
  check->add_option("--reps", reps, "periodic_point multiples to verify");
  check->add_option("--epsilon", epsilon, "net radius");
  check->add_option("--horizon", horizon, "max composition index");
  check->add_option("--grid", grid, "grid resolution");
  check->add_option("--delta-list", delta_list, "comma-separated decreasing sensitivity constants");
  check->add_option("--tol", tol, "tolerance");
  check->add_option("--gap", gap, "syndetic gap bound");
  check->add_option("--out", out, "write the verdict as JSON");

  CLI::App* compare = app.add_subcommand("compare", "run a detector suite across transformed variants");
  compare->add_option("--system", system_spec, "fixture name or system JSON file")->required();
  compare->add_option("--transform", transforms,
                      "truncate:K | insert:R:MAP | delete:K | rearrange:P1,P2,... | block_rearrange "
                      "(cumulative, one variant per prefix)");
  compare->add_option("--suite", suite, "all or comma-separated property list");
  compare->add_option("--out", out, "write the comparison report as JSON");

  CLI::App* verify = app.add_subcommand("verify-paper", "replay the built-in catalogue of truncation/rearrangement checks");
  verify->add_option("id", verify_id, "catalogue id or 'all'")->required();
  verify->add_option("--out", out, "write all check reports as JSON");
  verify->add_flag("--verbose", verbose, "print per-assertion notes even on success");

  CLI::App* fixtures = app.add_subcommand("fixtures", "built-in systems");
  CLI::App* fixtures_list = fixtures->add_subcommand("list", "list registered fixtures");
  fixtures->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(system_spec, property, pair, point, period, reps, delta_list, epsilon, horizon,
                       grid, tol, gap, out);
    if (compare->parsed()) return run_compare(system_spec, transforms, suite, out);
    if (verify->parsed()) return run_verify(verify_id, out, verbose);
    if (fixtures_list->parsed()) {
      for (const std::string& name : nadyn::fixture_names()) {
        const nadyn::FixtureEntry& e = nadyn::get_fixture(name);
        std::cout << name << "\n    " << e.schedule.describe() << "\n    " << e.notes << "\n";
      }
      std::cout << "maps for insert transforms: ";
      for (size_t i = 0; i < nadyn::named_map_names().size(); ++i)
        std::cout << (i ? ", " : "") << nadyn::named_map_names()[i];
      std::cout << "\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const nadyn::UnknownFixture& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
