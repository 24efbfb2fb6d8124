#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nadyn/rational.hpp"

namespace nadyn {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTau = 2.0 * kPi;

struct SpaceMismatch : std::invalid_argument {
  SpaceMismatch() : std::invalid_argument("points/sets belong to different spaces") {}
};

enum class SpaceKind { UnitInterval, Circle, BinaryShift };

std::string to_string(SpaceKind k);

// One of the three compact phase spaces: [0,1] with |x-y|, the circle with
// the arc metric, or two-sided binary sequences with the weighted Hamming
// metric truncated to the window [-W, W].
class Space {
public:
  static Space unit_interval() { return Space(SpaceKind::UnitInterval, 0); }
  static Space circle() { return Space(SpaceKind::Circle, 0); }
  static Space binary_shift(int window) {
    if (window < 1) throw std::invalid_argument("shift window must be >= 1");
    return Space(SpaceKind::BinaryShift, window);
  }

  SpaceKind kind() const { return kind_; }
  int window() const { return window_; }
  double diameter() const;

  friend bool operator==(const Space&, const Space&) = default;

private:
  Space(SpaceKind k, int w) : kind_(k), window_(w) {}
  SpaceKind kind_;
  int window_;
};

// Two-sided binary word with finite support and explicit zero-extension.
// Shifts move the recorded origin, so they are exact and invertible; the
// word also counts how many shifts it has undergone.
class Word {
public:
  Word() = default;
  Word(std::vector<uint8_t> letters, long start);

  static Word zeros() { return Word(); }
  static Word single_one(long index) { return Word({1}, index); }

  int bit(long index) const {
    long j = index - start_;
    return (j >= 0 && j < static_cast<long>(letters_.size())) ? letters_[j] : 0;
  }
  // Indices carrying explicitly stored letters: [support_begin, support_end).
  long support_begin() const { return start_; }
  long support_end() const { return start_ + static_cast<long>(letters_.size()); }
  bool all_zero() const { return letters_.empty(); }

  Word shifted_left() const;   // result.bit(i) = bit(i+1)
  Word shifted_right() const;  // result.bit(i) = bit(i-1)
  Word with_bit(long index, int value) const;
  Word negated_range(long lo, long hi) const;  // flips letters on [lo, hi]

  int shift_count() const { return shift_count_; }

  // Letter-by-letter equality over all of Z (shift_count is metadata).
  friend bool operator==(const Word& a, const Word& b) {
    return a.start_ == b.start_ && a.letters_ == b.letters_;
  }

  std::string str() const;  // e.g. "101@-1" (letters starting at index -1)
  static std::optional<Word> parse(std::string_view s);

private:
  std::vector<uint8_t> letters_;  // letters_[j] is the letter at index start_ + j
  long start_ = 0;
  int shift_count_ = 0;
  void trim();
};

// A location in one of the three spaces. Interval points carry a coordinate
// in [0,1] and circle points an angle in [0, 2pi); both keep an optional
// exact rational mirror (the circle one in units of pi) that survives
// evaluation by rational-coefficient maps until 64-bit arithmetic overflows.
class Point {
public:
  static Point interval(double x);
  static Point interval(const Rational& x);
  static Point circle(double radians);
  static Point circle_over_pi(const Rational& angle_over_pi);
  static Point shift(const Space& s, Word w);

  const Space& space() const { return space_; }
  double coord() const { return coord_; }  // interval coordinate or angle in radians
  const std::optional<Rational>& exact() const { return exact_; }  // coordinate or angle/pi
  const Word& word() const { return word_; }

  static Point interval_raw(const Space& s, double x, std::optional<Rational> exact);
  static Point circle_raw(const Space& s, double radians, std::optional<Rational> over_pi);

private:
  explicit Point(const Space& s) : space_(s) {}
  Space space_ = Space::unit_interval();
  double coord_ = 0;
  std::optional<Rational> exact_;
  Word word_;
};

double distance(const Point& p, const Point& q);

enum class SetShape { Interval, Arc, Cylinder };

// Open-ball surrogate: open subinterval, open arc (stored unwrapped when it
// crosses zero, hi may exceed 2pi), or a cylinder fixing a contiguous block
// of coordinates.
class OpenSet {
public:
  static OpenSet interval(double lo, double hi);
  static OpenSet arc(double lo, double hi);
  static OpenSet cylinder(const Space& s, long fix_start, std::vector<uint8_t> pattern);

  SetShape shape() const { return shape_; }
  const Space& space() const { return space_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  long fix_begin() const { return fix_start_; }
  long fix_end() const { return fix_start_ + static_cast<long>(pattern_.size()); }
  const std::vector<uint8_t>& pattern() const { return pattern_; }

  bool contains(const Point& p) const;
  Point center() const;
  std::string str() const;

private:
  OpenSet(const Space& s, SetShape sh) : space_(s), shape_(sh) {}
  Space space_ = Space::unit_interval();
  SetShape shape_ = SetShape::Interval;
  double lo_ = 0, hi_ = 0;
  long fix_start_ = 0;
  std::vector<uint8_t> pattern_;
};

// Finite open cover by sets of diameter <= 2*radius; deterministic for a
// fixed (space, radius). Interval/circle: overlapping balls of the given
// radius with centers spaced one radius apart. Shift: all cylinders fixing
// [-m, m] with 2^-m <= 2*radius.
std::vector<OpenSet> epsilon_net(const Space& s, double radius);

// Deterministic finite sample of the interior of u. Intervals/arcs get
// `resolution` equally spaced interior points; cylinders enumerate all
// extensions over one free coordinate on each side of the fixed block.
std::vector<Point> sample_grid(const OpenSet& u, int resolution);

// Deterministic grid over the whole space: interior points k/(r+1) on the
// interval, angles 2*pi*k/r on the circle, and for the shift all words
// supported on [-m, m] with 2^(2m+1) <= max(r, 8).
std::vector<Point> space_grid(const Space& s, int resolution);

}  // namespace nadyn
