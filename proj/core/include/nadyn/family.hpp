#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nadyn/map.hpp"

namespace nadyn {

// The family F = {f_n : n >= 1} as a lazily indexed rule, so infinite block
// schedules stay exact. Truncation, insertion, deletion and finite
// rearrangement are index-remapping views; all values are immutable.
class Schedule {
public:
  struct Rule {
    virtual ~Rule() = default;
    virtual SelfMap at(long i) const = 0;  // i >= 1
    virtual std::vector<SelfMap> tail_generators() const = 0;
    virtual std::string describe() const = 0;
  };

  const Space& space() const { return space_; }
  SelfMap at(long i) const;
  std::string describe() const { return rule_->describe(); }

  // G(i) = F(i + k): drops the first k maps.
  Schedule truncated(long k) const;
  // G(position) = f, later maps pushed one index up.
  Schedule with_insertion(long position, SelfMap f) const;
  // Removes the map at `position`, later maps pulled one index down.
  Schedule with_deletion(long position) const;
  // perm is a bijection of {1..m} (1-based values); G(i) = F(perm[i-1]) for
  // i <= m and G(i) = F(i) beyond, so the tail is untouched.
  Schedule with_rearrangement(std::vector<long> perm) const;

  // The maps that occur at all large indices; together with a finite prefix
  // scan this makes feeble-openness of the whole family decidable exactly.
  std::vector<SelfMap> tail_generators() const { return rule_->tail_generators(); }

  static Schedule eventually_constant(std::vector<SelfMap> prefix, SelfMap tail);
  static Schedule periodic(std::vector<SelfMap> cycle);
  // The block family {sigma, sigma^-1, sigma, sigma, sigma^-1, sigma^-1, ...}:
  // sigma on indices [n(n+1)+1, (n+1)^2], its inverse on [(n+1)^2+1, (n+1)(n+2)].
  static Schedule shift_blocks(const Space& s);
  // The alternating family {sigma, sigma^-1, sigma, sigma^-1, ...}.
  static Schedule shift_alternating(const Space& s);

private:
  Schedule(Space s, std::shared_ptr<const Rule> rule) : space_(s), rule_(std::move(rule)) {}
  Space space_ = Space::unit_interval();
  std::shared_ptr<const Rule> rule_;
};

// The block family and its infinite rearrangement; every prefix of length
// (n+1)(n+2) holds equal numbers of each shift in both schedules.
std::pair<Schedule, Schedule> shift_rearrangement_pair(const Space& s);

// State after `steps` iterations: f_steps o ... o f_1 (steps = 0 is the seed).
Point evolve(const Schedule& f, long steps, const Point& seed);

// Composition of the maps at indices start+1 ... start+count.
Point evolve_from(const Schedule& f, long start, long count, const Point& seed);

struct Orbit {
  Point seed;
  std::vector<Point> points;  // points[n] is the state after n steps; points[0] == seed
};

Orbit compute_orbit(const Schedule& f, const Point& seed, long horizon);

}  // namespace nadyn
