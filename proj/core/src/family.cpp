#include "nadyn/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nadyn {

namespace {

struct EventuallyConstantRule final : Schedule::Rule {
  std::vector<SelfMap> prefix;
  SelfMap tail;
  EventuallyConstantRule(std::vector<SelfMap> p, SelfMap t) : prefix(std::move(p)), tail(std::move(t)) {}
  SelfMap at(long i) const override {
    return i <= static_cast<long>(prefix.size()) ? prefix[static_cast<size_t>(i - 1)] : tail;
  }
  std::vector<SelfMap> tail_generators() const override { return {tail}; }
  std::string describe() const override {
    std::string s = "{";
    for (const SelfMap& f : prefix) s += f.label() + ", ";
    return s + tail.label() + ", " + tail.label() + ", ...}";
  }
};

struct PeriodicRule final : Schedule::Rule {
  std::vector<SelfMap> cycle;
  explicit PeriodicRule(std::vector<SelfMap> c) : cycle(std::move(c)) {}
  SelfMap at(long i) const override { return cycle[static_cast<size_t>((i - 1) % static_cast<long>(cycle.size()))]; }
  std::vector<SelfMap> tail_generators() const override { return cycle; }
  std::string describe() const override {
    std::string s = "periodic{";
    for (size_t j = 0; j < cycle.size(); ++j) s += (j ? ", " : "") + cycle[j].label();
    return s + "}";
  }
};

struct ShiftBlockRule final : Schedule::Rule {
  SelfMap fwd, bwd;
  ShiftBlockRule(SelfMap f, SelfMap b) : fwd(std::move(f)), bwd(std::move(b)) {}
  SelfMap at(long i) const override {
    long n = static_cast<long>((std::sqrt(4.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
    while (n > 0 && n * (n + 1) >= i) --n;
    while ((n + 1) * (n + 2) < i) ++n;
    return i <= (n + 1) * (n + 1) ? fwd : bwd;
  }
  std::vector<SelfMap> tail_generators() const override { return {fwd, bwd}; }
  std::string describe() const override { return "shift blocks {s, s', s, s, s', s', ...}"; }
};

struct ShiftAlternatingRule final : Schedule::Rule {
  SelfMap fwd, bwd;
  ShiftAlternatingRule(SelfMap f, SelfMap b) : fwd(std::move(f)), bwd(std::move(b)) {}
  SelfMap at(long i) const override { return i % 2 == 1 ? fwd : bwd; }
  std::vector<SelfMap> tail_generators() const override { return {fwd, bwd}; }
  std::string describe() const override { return "alternating {s, s', s, s', ...}"; }
};

struct TruncateRule final : Schedule::Rule {
  Schedule base;
  long k;
  TruncateRule(Schedule b, long k_) : base(std::move(b)), k(k_) {}
  SelfMap at(long i) const override { return base.at(i + k); }
  std::vector<SelfMap> tail_generators() const override { return base.tail_generators(); }
  std::string describe() const override { return base.describe() + " truncated by " + std::to_string(k); }
};

struct InsertRule final : Schedule::Rule {
  Schedule base;
  long position;
  SelfMap inserted;
  InsertRule(Schedule b, long r, SelfMap f) : base(std::move(b)), position(r), inserted(std::move(f)) {}
  SelfMap at(long i) const override {
    if (i < position) return base.at(i);
    if (i == position) return inserted;
    return base.at(i - 1);
  }
  std::vector<SelfMap> tail_generators() const override { return base.tail_generators(); }
  std::string describe() const override {
    return base.describe() + " with " + inserted.label() + " inserted at " + std::to_string(position);
  }
};

struct DeleteRule final : Schedule::Rule {
  Schedule base;
  long position;
  DeleteRule(Schedule b, long k) : base(std::move(b)), position(k) {}
  SelfMap at(long i) const override { return i < position ? base.at(i) : base.at(i + 1); }
  std::vector<SelfMap> tail_generators() const override { return base.tail_generators(); }
  std::string describe() const override { return base.describe() + " with index " + std::to_string(position) + " deleted"; }
};

struct RearrangeRule final : Schedule::Rule {
  Schedule base;
  std::vector<long> perm;  // 1-based values on {1..m}
  RearrangeRule(Schedule b, std::vector<long> p) : base(std::move(b)), perm(std::move(p)) {}
  SelfMap at(long i) const override {
    if (i <= static_cast<long>(perm.size())) return base.at(perm[static_cast<size_t>(i - 1)]);
    return base.at(i);
  }
  std::vector<SelfMap> tail_generators() const override { return base.tail_generators(); }
  std::string describe() const override {
    return base.describe() + " rearranged on first " + std::to_string(perm.size()) + " indices";
  }
};

}  // namespace

SelfMap Schedule::at(long i) const {
  if (i < 1) throw std::invalid_argument("schedule indices start at 1");
  return rule_->at(i);
}

Schedule Schedule::truncated(long k) const {
  if (k < 0) throw std::invalid_argument("truncation depth must be >= 0");
  if (k == 0) return *this;
  return Schedule(space_, std::make_shared<TruncateRule>(*this, k));
}

Schedule Schedule::with_insertion(long position, SelfMap f) const {
  if (position < 1) throw std::invalid_argument("insertion position must be >= 1");
  if (!(f.space() == space_)) throw SpaceMismatch();
  return Schedule(space_, std::make_shared<InsertRule>(*this, position, std::move(f)));
}

Schedule Schedule::with_deletion(long position) const {
  if (position < 1) throw std::invalid_argument("deletion position must be >= 1");
  return Schedule(space_, std::make_shared<DeleteRule>(*this, position));
}

Schedule Schedule::with_rearrangement(std::vector<long> perm) const {
  std::vector<bool> seen(perm.size(), false);
  for (long v : perm) {
    if (v < 1 || v > static_cast<long>(perm.size()) || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("rearrangement must be a bijection of {1..m}");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return Schedule(space_, std::make_shared<RearrangeRule>(*this, std::move(perm)));
}

Schedule Schedule::eventually_constant(std::vector<SelfMap> prefix, SelfMap tail) {
  Space s = tail.space();
  for (const SelfMap& f : prefix)
    if (!(f.space() == s)) throw SpaceMismatch();
  return Schedule(s, std::make_shared<EventuallyConstantRule>(std::move(prefix), std::move(tail)));
}

Schedule Schedule::periodic(std::vector<SelfMap> cycle) {
  if (cycle.empty()) throw std::invalid_argument("periodic schedule needs a non-empty cycle");
  Space s = cycle.front().space();
  for (const SelfMap& f : cycle)
    if (!(f.space() == s)) throw SpaceMismatch();
  return Schedule(s, std::make_shared<PeriodicRule>(std::move(cycle)));
}

Schedule Schedule::shift_blocks(const Space& s) {
  return Schedule(s, std::make_shared<ShiftBlockRule>(SelfMap::shift_left(s), SelfMap::shift_right(s)));
}

Schedule Schedule::shift_alternating(const Space& s) {
  return Schedule(s, std::make_shared<ShiftAlternatingRule>(SelfMap::shift_left(s), SelfMap::shift_right(s)));
}

std::pair<Schedule, Schedule> shift_rearrangement_pair(const Space& s) {
  return {Schedule::shift_blocks(s), Schedule::shift_alternating(s)};
}

Point evolve(const Schedule& f, long steps, const Point& seed) {
  if (steps < 0) throw std::invalid_argument("cannot evolve a negative number of steps");
  Point p = seed;
  for (long i = 1; i <= steps; ++i) p = apply(f.at(i), p);
  return p;
}

Point evolve_from(const Schedule& f, long start, long count, const Point& seed) {
  if (start < 0 || count < 0) throw std::invalid_argument("window indices must be non-negative");
  Point p = seed;
  for (long i = start + 1; i <= start + count; ++i) p = apply(f.at(i), p);
  return p;
}

Orbit compute_orbit(const Schedule& f, const Point& seed, long horizon) {
  Orbit orbit{seed, {seed}};
  orbit.points.reserve(static_cast<size_t>(horizon) + 1);
  Point p = seed;
  for (long n = 1; n <= horizon; ++n) {
    p = apply(f.at(n), p);
    orbit.points.push_back(p);
  }
  return orbit;
}

}  // namespace nadyn
