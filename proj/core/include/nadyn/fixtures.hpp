#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nadyn/detectors.hpp"

namespace nadyn {

struct UnknownFixture : std::invalid_argument {
  explicit UnknownFixture(const std::string& what) : std::invalid_argument(what) {}
};

struct ExpectedVerdict {
  std::string property;
  DetectorParams params;
  VerdictStatus status;
  std::optional<double> delta;  // sensitivity family only
};

struct FixtureEntry {
  std::string name;
  Schedule schedule;
  std::string notes;
  std::vector<ExpectedVerdict> expected;
};

// Registered systems: prox1, prox1_h, prox2, prox3, sens, shift_block,
// shift_alternating, rotation_minimal, commuting_rotations, tent_autonomous,
// identity_autonomous. Unknown names raise UnknownFixture listing the
// registry.
const FixtureEntry& get_fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

// Individual maps by name (tent, sens_f, prox1_f, prox1_h, prox2_f, prox2_g,
// prox3_f, prox3_g, identity, rot1, rot_half, sigma, sigma_inverse), usable
// as insertion material from the CLI.
const SelfMap& named_map(const std::string& name);
const std::vector<std::string>& named_map_names();

// Desk-scale commutativity check: d(f(g(p)), g(f(p))) < tol on every grid
// point.
bool commuting_check(const SelfMap& f, const SelfMap& g, const std::vector<Point>& grid,
                     double tol = 1e-9);

}  // namespace nadyn
