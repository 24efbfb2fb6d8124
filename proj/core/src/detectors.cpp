#include "nadyn/detectors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "nadyn/json_io.hpp"

namespace nadyn {

using nlohmann::json;

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Witnessed: return "WITNESSED";
    case VerdictStatus::Refuted: return "REFUTED";
    case VerdictStatus::NoWitnessAtScale: return "NO_WITNESS_AT_SCALE";
  }
  return "?";
}

DetectorParams DetectorParams::defaults_for(const Space& s) {
  DetectorParams p;
  if (s.kind() == SpaceKind::BinaryShift) {
    p.epsilon_net = 1.0 / 8;   // cylinders fixing [-2, 2]
    p.grid_resolution = 2048;  // words on [-5, 5]: pair distances resolve below every modulus
  }
  return p;
}

void DetectorParams::validate() const {
  if (epsilon_net <= 0) throw std::invalid_argument("epsilon_net must be positive");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (delta_list.empty()) throw std::invalid_argument("delta_list must be non-empty");
  for (size_t i = 0; i < delta_list.size(); ++i) {
    if (delta_list[i] <= 0) throw std::invalid_argument("delta_list entries must be positive");
    if (i > 0 && delta_list[i] >= delta_list[i - 1])
      throw std::invalid_argument("delta_list must be strictly decreasing");
  }
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (gap_bound < 1) throw std::invalid_argument("gap bound must be >= 1");
}

std::optional<double> Verdict::delta() const {
  if (evidence.contains("delta")) return evidence["delta"].get<double>();
  return std::nullopt;
}

namespace {

// Bit mask over times 1..horizon.
struct TimeSet {
  long horizon = 0;
  std::vector<uint64_t> bits;
  explicit TimeSet(long h = 0) : horizon(h), bits(static_cast<size_t>((h + 64) / 64), 0) {}
  void set(long n) { bits[static_cast<size_t>(n >> 6)] |= uint64_t(1) << (n & 63); }
  bool test(long n) const { return (bits[static_cast<size_t>(n >> 6)] >> (n & 63)) & 1; }
  long first_common(const TimeSet& o) const {
    for (size_t w = 0; w < bits.size(); ++w) {
      uint64_t x = bits[w] & o.bits[w];
      if (x) {
        long n = static_cast<long>(w) * 64 + __builtin_ctzll(x);
        return n <= horizon ? n : -1;
      }
    }
    return -1;
  }
  long first_set() const { return first_common(*this); }
};

std::vector<SelfMap> schedule_prefix(const Schedule& f, long horizon) {
  std::vector<SelfMap> maps;
  maps.reserve(static_cast<size_t>(horizon));
  for (long n = 1; n <= horizon; ++n) maps.push_back(f.at(n));
  return maps;
}

std::vector<std::vector<Point>> run_orbits(const std::vector<SelfMap>& maps, std::vector<Point> seeds) {
  // orbits[n][s] is sample s after n steps.
  std::vector<std::vector<Point>> orbits;
  orbits.reserve(maps.size() + 1);
  orbits.push_back(std::move(seeds));
  for (const SelfMap& f : maps) {
    std::vector<Point> next;
    next.reserve(orbits.back().size());
    for (const Point& p : orbits.back()) next.push_back(apply(f, p));
    orbits.push_back(std::move(next));
  }
  return orbits;
}

// Locates the net members containing a point in O(1) using the regular net
// layout (balls partition/overlap on a uniform lattice; cylinder patterns
// partition the shift space).
struct NetIndexer {
  const Space space;
  const std::vector<OpenSet>& net;
  double radius;
  int count;
  long m = 0;  // cylinder fixed-range radius

  NetIndexer(const Space& s, const std::vector<OpenSet>& n, double r)
      : space(s), net(n), radius(r), count(static_cast<int>(n.size())) {
    if (s.kind() == SpaceKind::BinaryShift) {
      m = (net.front().fix_end() - net.front().fix_begin() - 1) / 2;
    }
  }

  void members(const Point& p, std::vector<int>& out) const {
    out.clear();
    switch (space.kind()) {
      case SpaceKind::UnitInterval: {
        int k0 = static_cast<int>(p.coord() * count);
        for (int k = std::max(0, k0 - 2); k <= std::min(count - 1, k0 + 2); ++k)
          if (net[static_cast<size_t>(k)].contains(p)) out.push_back(k);
        break;
      }
      case SpaceKind::Circle: {
        int k0 = static_cast<int>(p.coord() / kTau * count);
        for (int dk = -2; dk <= 2; ++dk) {
          int k = ((k0 + dk) % count + count) % count;
          if (net[static_cast<size_t>(k)].contains(p)) out.push_back(k);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        break;
      }
      case SpaceKind::BinaryShift: {
        long idx = 0;
        for (long j = 0; j < 2 * m + 1; ++j) idx |= static_cast<long>(p.word().bit(-m + j)) << j;
        out.push_back(static_cast<int>(idx));
        break;
      }
    }
  }
};

struct NetOrbits {
  std::vector<OpenSet> net;
  // orbit[u] as produced by run_orbits: orbit[u][n][s].
  std::vector<std::vector<std::vector<Point>>> orbit;
  // hits[u * net.size() + v]: times n with some sample of u landing in v.
  std::vector<TimeSet> hits;
  long horizon;

  const TimeSet& hit(size_t u, size_t v) const { return hits[u * net.size() + v]; }
};

NetOrbits build_net_orbits(const Schedule& f, const DetectorParams& params, bool with_hits) {
  NetOrbits data;
  data.horizon = params.horizon;
  data.net = epsilon_net(f.space(), params.epsilon_net);
  std::vector<SelfMap> maps = schedule_prefix(f, params.horizon);
  data.orbit.reserve(data.net.size());
  for (const OpenSet& u : data.net)
    data.orbit.push_back(run_orbits(maps, sample_grid(u, params.grid_resolution)));
  if (!with_hits) return data;

  NetIndexer indexer(f.space(), data.net, params.epsilon_net);
  size_t nb = data.net.size();
  data.hits.assign(nb * nb, TimeSet(params.horizon));
  std::vector<int> members;
  for (size_t u = 0; u < nb; ++u)
    for (long n = 1; n <= params.horizon; ++n)
      for (const Point& p : data.orbit[u][static_cast<size_t>(n)]) {
        indexer.members(p, members);
        for (int v : members) data.hits[u * nb + static_cast<size_t>(v)].set(n);
      }
  return data;
}

json witness_json(const NetOrbits& data, size_t u, size_t v, long n) {
  for (size_t s = 0; s < data.orbit[u][0].size(); ++s) {
    const Point& image = data.orbit[u][static_cast<size_t>(n)][s];
    if (data.net[v].contains(image))
      return json{{"seed", point_to_json(data.orbit[u][0][s])},
                  {"image", point_to_json(image)},
                  {"time", n}};
  }
  return json();
}

constexpr size_t kPairTableCap = 2048;

// ---------------------------------------------------------------------------
// Diameter tables for the sensitivity family

double sampled_diameter(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  switch (pts.front().space().kind()) {
    case SpaceKind::UnitInterval: {
      double lo = pts.front().coord(), hi = lo;
      for (const Point& p : pts) {
        lo = std::min(lo, p.coord());
        hi = std::max(hi, p.coord());
      }
      return hi - lo;
    }
    default: {
      double best = 0;
      for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
      return best;
    }
  }
}

std::pair<size_t, size_t> sampled_diameter_pair(const std::vector<Point>& pts) {
  double best = -1;
  std::pair<size_t, size_t> arg{0, 0};
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      double d = distance(pts[i], pts[j]);
      if (d > best) {
        best = d;
        arg = {i, j};
      }
    }
  return arg;
}

constexpr long kExactDepth = 12;
constexpr size_t kExactPartCap = 64;

bool exact_route_applies(const Space& space, const std::vector<SelfMap>& maps, long depth) {
  if (space.kind() != SpaceKind::UnitInterval) return false;
  for (long n = 0; n < std::min<long>(depth, static_cast<long>(maps.size())); ++n) {
    MapKind k = maps[static_cast<size_t>(n)].kind();
    if (k != MapKind::Piecewise && k != MapKind::Identity) return false;
  }
  return true;
}

struct DiamTable {
  // value[u][n], n in 0..horizon; route[u] = number of leading exact entries.
  std::vector<std::vector<double>> value;
  std::vector<long> exact_upto;
};

DiamTable build_diam_table(const Schedule& f, const NetOrbits& data, const DetectorParams& params) {
  DiamTable table;
  std::vector<SelfMap> maps = schedule_prefix(f, params.horizon);
  bool exact = exact_route_applies(f.space(), maps, kExactDepth);
  table.value.resize(data.net.size());
  table.exact_upto.assign(data.net.size(), 0);
  for (size_t u = 0; u < data.net.size(); ++u) {
    auto& row = table.value[u];
    row.resize(static_cast<size_t>(params.horizon) + 1);
    for (long n = 0; n <= params.horizon; ++n)
      row[static_cast<size_t>(n)] = sampled_diameter(data.orbit[u][static_cast<size_t>(n)]);
    if (!exact) continue;
    ImageSet set;
    set.space = f.space();
    set.parts = {{data.net[u].lo(), data.net[u].hi()}};
    for (long n = 1; n <= std::min(kExactDepth, params.horizon); ++n) {
      set = image_of(maps[static_cast<size_t>(n - 1)], set);
      if (set.parts.size() > kExactPartCap) break;
      row[static_cast<size_t>(n)] = set.diameter();
      table.exact_upto[u] = n;
    }
  }
  return table;
}

json expansion_witness(const NetOrbits& data, const DiamTable& table, size_t u, long n) {
  json w{{"ball", data.net[u].str()}, {"time", n},
         {"diameter", table.value[u][static_cast<size_t>(n)]}};
  if (n <= table.exact_upto[u]) {
    w["route"] = "exact";
  } else {
    w["route"] = "sampled";
    auto [i, j] = sampled_diameter_pair(data.orbit[u][static_cast<size_t>(n)]);
    w["seed_pair"] = json::array({point_to_json(data.orbit[u][0][i]), point_to_json(data.orbit[u][0][j])});
  }
  return w;
}

std::vector<double> expansion_candidates(const DetectorParams& params) {
  // A candidate must exceed the net ball diameter, otherwise a ball would
  // count as expanded without having grown.
  std::vector<double> out;
  for (double d : params.delta_list)
    if (d > 2 * params.epsilon_net) out.push_back(d);
  return out;
}

enum class ExpansionMode { Some, Cofinite, Syndetic };

Verdict check_expansion(const Schedule& f, const DetectorParams& params, ExpansionMode mode,
                        const char* property) {
  params.validate();
  Verdict verdict{property, VerdictStatus::NoWitnessAtScale, params, json::object()};
  NetOrbits data = build_net_orbits(f, params, false);
  DiamTable table = build_diam_table(f, data, params);
  std::vector<double> candidates = expansion_candidates(params);
  verdict.evidence["candidates"] = candidates;
  if (candidates.empty()) {
    verdict.evidence["note"] = "no delta candidate exceeds the net ball diameter";
    return verdict;
  }

  json first_failure;
  for (double delta : candidates) {  // delta_list is decreasing: first hit is largest
    json per_ball = json::array();
    bool ok = true;
    json fail;
    for (size_t u = 0; u < data.net.size() && ok; ++u) {
      const auto& row = table.value[u];
      switch (mode) {
        case ExpansionMode::Some: {
          long hit = -1;
          for (long n = 1; n <= params.horizon; ++n)
            if (row[static_cast<size_t>(n)] > delta) {
              hit = n;
              break;
            }
          if (hit < 0) {
            ok = false;
            fail = json{{"ball", data.net[u].str()},
                        {"max_diameter", *std::max_element(row.begin() + 1, row.end())}};
          } else if (per_ball.size() < kPairTableCap) {
            per_ball.push_back(expansion_witness(data, table, u, hit));
          }
          break;
        }
        case ExpansionMode::Cofinite: {
          long bad = -1;
          for (long n = params.horizon; n >= 1; --n)
            if (!(row[static_cast<size_t>(n)] > delta)) {
              bad = n;
              break;
            }
          long k = bad + 1;
          if (k > params.horizon / 2) {
            ok = false;
            fail = json{{"ball", data.net[u].str()}, {"last_failure", bad}};
          } else if (per_ball.size() < kPairTableCap) {
            per_ball.push_back(json{{"ball", data.net[u].str()}, {"threshold", k}});
          }
          break;
        }
        case ExpansionMode::Syndetic: {
          long last = 0, max_gap = 0, gap_at = 0;
          for (long n = 1; n <= params.horizon; ++n)
            if (row[static_cast<size_t>(n)] > delta) {
              if (n - last > max_gap) {
                max_gap = n - last;
                gap_at = n;
              }
              last = n;
            }
          if (params.horizon + 1 - last > max_gap) {
            max_gap = params.horizon + 1 - last;
            gap_at = params.horizon + 1;
          }
          if (max_gap > params.gap_bound) {
            ok = false;
            fail = json{{"ball", data.net[u].str()}, {"max_gap", max_gap}, {"gap_ending_at", gap_at}};
          } else if (per_ball.size() < kPairTableCap) {
            per_ball.push_back(json{{"ball", data.net[u].str()}, {"max_gap", max_gap}});
          }
          break;
        }
      }
    }
    if (ok) {
      verdict.status = VerdictStatus::Witnessed;
      verdict.evidence["delta"] = delta;
      verdict.evidence["per_ball"] = per_ball;
      return verdict;
    }
    if (first_failure.is_null()) {
      first_failure = fail;
      first_failure["delta"] = delta;
    }
  }
  verdict.evidence["failure"] = first_failure;
  return verdict;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mixing family

Verdict check_transitivity(const Schedule& f, const DetectorParams& params) {
  params.validate();
  Verdict verdict{"transitivity", VerdictStatus::NoWitnessAtScale, params, json::object()};
  NetOrbits data = build_net_orbits(f, params, true);
  size_t nb = data.net.size();
  json table = json::array();
  long worst_n = 0;
  size_t worst_u = 0, worst_v = 0;
  for (size_t u = 0; u < nb; ++u)
    for (size_t v = 0; v < nb; ++v) {
      long n = data.hit(u, v).first_set();
      if (n < 0) {
        verdict.evidence = json{{"unhit_pair", {{"u", data.net[u].str()}, {"v", data.net[v].str()}}},
                                {"pairs_checked", nb * nb}};
        return verdict;
      }
      if (table.size() < kPairTableCap) table.push_back(json{{"u", u}, {"v", v}, {"n", n}});
      if (n > worst_n) {
        worst_n = n;
        worst_u = u;
        worst_v = v;
      }
    }
  verdict.status = VerdictStatus::Witnessed;
  verdict.evidence["pairs"] = table;
  verdict.evidence["pair_count"] = nb * nb;
  verdict.evidence["worst"] = witness_json(data, worst_u, worst_v, worst_n);
  verdict.evidence["worst"]["u"] = worst_u;
  verdict.evidence["worst"]["v"] = worst_v;
  return verdict;
}

Verdict check_weak_mixing(const Schedule& f, const DetectorParams& params) {
  params.validate();
  Verdict verdict{"weak_mixing", VerdictStatus::NoWitnessAtScale, params, json::object()};
  NetOrbits data = build_net_orbits(f, params, true);
  size_t nb = data.net.size();
  long worst_n = 0;
  std::array<size_t, 4> worst{0, 0, 0, 0};
  for (size_t u1 = 0; u1 < nb; ++u1)
    for (size_t v1 = 0; v1 < nb; ++v1) {
      const TimeSet& h1 = data.hit(u1, v1);
      for (size_t u2 = 0; u2 < nb; ++u2)
        for (size_t v2 = 0; v2 < nb; ++v2) {
          long n = h1.first_common(data.hit(u2, v2));
          if (n < 0) {
            verdict.evidence = json{{"missing_quadruple",
                                     {{"u1", data.net[u1].str()},
                                      {"v1", data.net[v1].str()},
                                      {"u2", data.net[u2].str()},
                                      {"v2", data.net[v2].str()}}}};
            return verdict;
          }
          if (n > worst_n) {
            worst_n = n;
            worst = {u1, v1, u2, v2};
          }
        }
    }
  verdict.status = VerdictStatus::Witnessed;
  verdict.evidence["quadruple_count"] = nb * nb * nb * nb;
  verdict.evidence["worst"] =
      json{{"u1", worst[0]}, {"v1", worst[1]}, {"u2", worst[2]}, {"v2", worst[3]}, {"n", worst_n},
           {"witness1", witness_json(data, worst[0], worst[1], worst_n)},
           {"witness2", witness_json(data, worst[2], worst[3], worst_n)}};
  return verdict;
}

Verdict check_topological_mixing(const Schedule& f, const DetectorParams& params) {
  params.validate();
  Verdict verdict{"topological_mixing", VerdictStatus::NoWitnessAtScale, params, json::object()};
  NetOrbits data = build_net_orbits(f, params, true);
  size_t nb = data.net.size();
  json table = json::array();
  long worst_k = 0;
  for (size_t u = 0; u < nb; ++u)
    for (size_t v = 0; v < nb; ++v) {
      const TimeSet& h = data.hit(u, v);
      long bad = -1;
      for (long n = params.horizon; n >= 1; --n)
        if (!h.test(n)) {
          bad = n;
          break;
        }
      long k = std::max<long>(1, bad + 1);
      if (k > params.horizon / 2) {
        verdict.evidence = json{{"pair", {{"u", data.net[u].str()}, {"v", data.net[v].str()}}},
                                {"last_miss", bad}};
        return verdict;
      }
      if (table.size() < kPairTableCap) table.push_back(json{{"u", u}, {"v", v}, {"K", k}});
      worst_k = std::max(worst_k, k);
    }
  verdict.status = VerdictStatus::Witnessed;
  verdict.evidence["pairs"] = table;
  verdict.evidence["pair_count"] = nb * nb;
  verdict.evidence["max_threshold"] = worst_k;
  return verdict;
}

// ---------------------------------------------------------------------------
// Sensitivity family

Verdict check_sensitivity(const Schedule& f, const DetectorParams& params) {
  return check_expansion(f, params, ExpansionMode::Some, "sensitivity");
}

Verdict check_cofinite_sensitivity(const Schedule& f, const DetectorParams& params) {
  return check_expansion(f, params, ExpansionMode::Cofinite, "cofinite_sensitivity");
}

Verdict check_syndetic_sensitivity(const Schedule& f, const DetectorParams& params) {
  return check_expansion(f, params, ExpansionMode::Syndetic, "syndetic_sensitivity");
}

// ---------------------------------------------------------------------------
// Equicontinuity

Verdict check_equicontinuity(const Schedule& f, const DetectorParams& params) {
  params.validate();
  Verdict verdict{"equicontinuity", VerdictStatus::NoWitnessAtScale, params, json::object()};
  const std::vector<double> ladder{0.25, 0.125, 0.0625};

  auto candidates_for = [&](double eps) {
    std::vector<double> c;
    for (double d : params.delta_list)
      if (d <= eps) c.push_back(d);
    c.push_back(eps / 2);
    c.push_back(eps / 4);
    std::sort(c.rbegin(), c.rend());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  };

  double delta_cap = 0;
  for (double eps : ladder)
    for (double d : candidates_for(eps)) delta_cap = std::max(delta_cap, d);
  double eps_cap = *std::max_element(ladder.begin(), ladder.end());

  std::vector<Point> grid = space_grid(f.space(), params.grid_resolution);
  std::vector<SelfMap> maps = schedule_prefix(f, params.horizon);
  std::vector<std::vector<Point>> orbits = run_orbits(maps, grid);

  struct Worst {
    double min_bad_d0 = std::numeric_limits<double>::infinity();
    size_t i = 0, j = 0;
    long n = 0;
    double div = 0;
  };
  std::vector<Worst> per_eps(ladder.size());

  size_t count = grid.size();
  for (size_t i = 0; i < count; ++i)
    for (size_t j = i + 1; j < count; ++j) {
      double d0 = distance(orbits[0][i], orbits[0][j]);
      if (d0 >= delta_cap || d0 == 0) continue;
      double div = 0;
      long div_at = 0;
      for (long n = 1; n <= params.horizon; ++n) {
        double d = distance(orbits[static_cast<size_t>(n)][i], orbits[static_cast<size_t>(n)][j]);
        if (d > div) {
          div = d;
          div_at = n;
        }
        if (div >= eps_cap) break;
      }
      for (size_t e = 0; e < ladder.size(); ++e) {
        if (div >= ladder[e] && d0 < per_eps[e].min_bad_d0) {
          per_eps[e] = {d0, i, j, div_at, div};
        }
      }
    }

  json modulus = json::array();
  for (size_t e = 0; e < ladder.size(); ++e) {
    double survivor = -1;
    for (double d : candidates_for(ladder[e]))
      if (d <= per_eps[e].min_bad_d0) {
        survivor = std::max(survivor, d);
      }
    if (survivor < 0) {
      const Worst& w = per_eps[e];
      verdict.status = VerdictStatus::Refuted;
      verdict.evidence = json{{"epsilon", ladder[e]},
                              {"pair", json::array({point_to_json(grid[w.i]), point_to_json(grid[w.j])})},
                              {"initial_distance", w.min_bad_d0},
                              {"diverged_at", w.n},
                              {"distance", w.div}};
      return verdict;
    }
    modulus.push_back(json{{"epsilon", ladder[e]}, {"delta", survivor}});
  }
  verdict.status = VerdictStatus::Witnessed;
  verdict.evidence["at_scale"] = true;
  verdict.evidence["modulus"] = modulus;
  return verdict;
}

// ---------------------------------------------------------------------------
// Proximality, minimality, periodic points

Verdict check_proximal(const Schedule& f, const Point& x, const Point& y, const DetectorParams& params) {
  params.validate();
  Verdict verdict{"proximality", VerdictStatus::NoWitnessAtScale, params, json::object()};
  Point px = x, py = y;
  double best = std::numeric_limits<double>::infinity();
  long best_n = 0;
  for (long n = 1; n <= params.horizon; ++n) {
    const SelfMap step = f.at(n);
    px = apply(step, px);
    py = apply(step, py);
    double d = distance(px, py);
    if (d < best) {
      best = d;
      best_n = n;
    }
  }
  verdict.evidence = json{{"x", point_to_json(x)}, {"y", point_to_json(y)},
                          {"min_distance", best}, {"argmin", best_n}};
  if (best < params.tol) verdict.status = VerdictStatus::Witnessed;
  return verdict;
}

Verdict check_minimality(const Schedule& f, const DetectorParams& params) {
  params.validate();
  Verdict verdict{"minimality", VerdictStatus::NoWitnessAtScale, params, json::object()};
  std::vector<OpenSet> net = epsilon_net(f.space(), params.epsilon_net);
  std::vector<Point> centers;
  centers.reserve(net.size());
  for (const OpenSet& u : net) centers.push_back(u.center());
  std::vector<Point> seeds = space_grid(f.space(), params.grid_resolution);
  std::vector<SelfMap> maps = schedule_prefix(f, params.horizon);

  double worst = 0;
  json worst_info;
  for (const Point& seed : seeds) {
    std::vector<double> closest(centers.size(), std::numeric_limits<double>::infinity());
    Point p = seed;
    for (long n = 1; n <= params.horizon; ++n) {
      p = apply(maps[static_cast<size_t>(n - 1)], p);
      for (size_t c = 0; c < centers.size(); ++c) closest[c] = std::min(closest[c], distance(p, centers[c]));
    }
    for (size_t c = 0; c < centers.size(); ++c) {
      if (closest[c] >= params.epsilon_net) {
        verdict.status = VerdictStatus::Refuted;
        verdict.evidence = json{{"seed", point_to_json(seed)}, {"uncovered_ball", net[c].str()},
                                {"closest_approach", closest[c]}};
        return verdict;
      }
      if (closest[c] > worst) {
        worst = closest[c];
        worst_info = json{{"seed", point_to_json(seed)}, {"ball", net[c].str()}, {"closest", closest[c]}};
      }
    }
  }
  verdict.status = VerdictStatus::Witnessed;
  verdict.evidence = json{{"at_scale", true}, {"seeds", seeds.size()}, {"worst_approach", worst_info}};
  return verdict;
}

Verdict check_periodic_point(const Schedule& f, const Point& p, long period, long reps, double tol) {
  if (period < 1 || reps < 1) throw std::invalid_argument("period and repetitions must be >= 1");
  DetectorParams params;
  params.horizon = period * reps;
  params.tol = tol;
  Verdict verdict{"periodic_point", VerdictStatus::Witnessed, params, json::object()};
  verdict.evidence = json{{"point", point_to_json(p)}, {"period", period}, {"reps", reps}};
  Point q = p;
  long n = 0;
  for (long k = 1; k <= reps; ++k) {
    while (n < period * k) {
      ++n;
      q = apply(f.at(n), q);
    }
    double d = distance(q, p);
    if (!(d < tol)) {
      verdict.status = VerdictStatus::Refuted;
      verdict.evidence["failed_at_multiple"] = k;
      verdict.evidence["distance"] = d;
      return verdict;
    }
  }
  return verdict;
}

bool family_is_feeble_open(const Schedule& f, long prefix_bound) {
  for (long i = 1; i <= prefix_bound; ++i)
    if (!is_feeble_open(f.at(i))) return false;
  for (const SelfMap& g : f.tail_generators())
    if (!is_feeble_open(g)) return false;
  return true;
}

}  // namespace nadyn
