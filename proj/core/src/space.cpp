#include "nadyn/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace nadyn {

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::UnitInterval: return "unit_interval";
    case SpaceKind::Circle: return "circle";
    case SpaceKind::BinaryShift: return "binary_shift";
  }
  return "?";
}

double Space::diameter() const {
  switch (kind_) {
    case SpaceKind::UnitInterval: return 1.0;
    case SpaceKind::Circle: return kPi;
    case SpaceKind::BinaryShift: return 3.0 - std::ldexp(1.0, 1 - window_);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<uint8_t> letters, long start) : letters_(std::move(letters)), start_(start) {
  for (uint8_t b : letters_)
    if (b > 1) throw std::invalid_argument("word letters must be 0 or 1");
  trim();
}

void Word::trim() {
  size_t lead = 0;
  while (lead < letters_.size() && letters_[lead] == 0) ++lead;
  if (lead == letters_.size()) {
    letters_.clear();
    start_ = 0;
    return;
  }
  size_t tail = letters_.size();
  while (tail > lead && letters_[tail - 1] == 0) --tail;
  if (lead > 0 || tail < letters_.size()) {
    letters_ = std::vector<uint8_t>(letters_.begin() + lead, letters_.begin() + tail);
    start_ += static_cast<long>(lead);
  }
}

Word Word::shifted_left() const {
  Word w = *this;
  w.start_ -= 1;
  w.shift_count_ += 1;
  return w;
}

Word Word::shifted_right() const {
  Word w = *this;
  w.start_ += 1;
  w.shift_count_ += 1;
  return w;
}

Word Word::with_bit(long index, int value) const {
  long lo = all_zero() ? index : std::min(index, support_begin());
  long hi = all_zero() ? index : std::max(index, support_end() - 1);
  std::vector<uint8_t> letters(static_cast<size_t>(hi - lo + 1), 0);
  for (long i = lo; i <= hi; ++i) letters[static_cast<size_t>(i - lo)] = static_cast<uint8_t>(bit(i));
  letters[static_cast<size_t>(index - lo)] = static_cast<uint8_t>(value);
  Word w(std::move(letters), lo);
  w.shift_count_ = shift_count_;
  return w;
}

Word Word::negated_range(long lo, long hi) const {
  long b = all_zero() ? lo : std::min(lo, support_begin());
  long e = all_zero() ? hi : std::max(hi, support_end() - 1);
  std::vector<uint8_t> letters(static_cast<size_t>(e - b + 1), 0);
  for (long i = b; i <= e; ++i) {
    int v = bit(i);
    if (i >= lo && i <= hi) v = 1 - v;
    letters[static_cast<size_t>(i - b)] = static_cast<uint8_t>(v);
  }
  Word w(std::move(letters), b);
  w.shift_count_ = shift_count_;
  return w;
}

std::string Word::str() const {
  if (all_zero()) return "0@0";
  std::string s;
  for (uint8_t b : letters_) s += b ? '1' : '0';
  return s + "@" + std::to_string(start_);
}

std::optional<Word> Word::parse(std::string_view s) {
  size_t at = s.find('@');
  std::string_view bits = at == std::string_view::npos ? s : s.substr(0, at);
  long start = 0;
  if (at != std::string_view::npos) {
    try {
      start = std::stol(std::string(s.substr(at + 1)));
    } catch (...) {
      return std::nullopt;
    }
  }
  std::vector<uint8_t> letters;
  for (char c : bits) {
    if (c != '0' && c != '1') return std::nullopt;
    letters.push_back(static_cast<uint8_t>(c - '0'));
  }
  return Word(std::move(letters), start);
}

// ---------------------------------------------------------------------------
// Point

namespace {
double reduce_angle(double a) {
  a = std::fmod(a, kTau);
  if (a < 0) a += kTau;
  if (a >= kTau) a = 0;  // fmod can land exactly on 2pi
  return a;
}
}  // namespace

Point Point::interval(double x) {
  if (x < -1e-9 || x > 1 + 1e-9) throw std::invalid_argument("interval coordinate outside [0,1]");
  Point p(Space::unit_interval());
  p.coord_ = std::clamp(x, 0.0, 1.0);
  p.exact_ = Rational::from_double(p.coord_);
  return p;
}

Point Point::interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) throw std::invalid_argument("interval coordinate outside [0,1]");
  Point p(Space::unit_interval());
  p.coord_ = x.to_double();
  p.exact_ = x;
  return p;
}

Point Point::circle(double radians) {
  Point p(Space::circle());
  p.coord_ = reduce_angle(radians);
  return p;
}

Point Point::circle_over_pi(const Rational& angle_over_pi) {
  Rational u = angle_over_pi;
  long long k = (u / Rational(2)).floor();
  u -= Rational(2) * Rational(k);  // reduce into [0, 2)
  Point p(Space::circle());
  p.exact_ = u;
  p.coord_ = reduce_angle(u.to_double() * kPi);
  return p;
}

Point Point::shift(const Space& s, Word w) {
  if (s.kind() != SpaceKind::BinaryShift) throw std::invalid_argument("word point needs a shift space");
  Point p(s);
  p.word_ = std::move(w);
  return p;
}

Point Point::interval_raw(const Space& s, double x, std::optional<Rational> exact) {
  Point p(s);
  p.coord_ = x;
  p.exact_ = std::move(exact);
  return p;
}

Point Point::circle_raw(const Space& s, double radians, std::optional<Rational> over_pi) {
  Point p(s);
  p.coord_ = reduce_angle(radians);
  p.exact_ = std::move(over_pi);
  return p;
}

double distance(const Point& p, const Point& q) {
  if (!(p.space() == q.space())) throw SpaceMismatch();
  switch (p.space().kind()) {
    case SpaceKind::UnitInterval: {
      if (p.exact() && q.exact()) return (*p.exact() - *q.exact()).abs().to_double();
      return std::fabs(p.coord() - q.coord());
    }
    case SpaceKind::Circle: {
      if (p.exact() && q.exact()) {
        Rational d = (*p.exact() - *q.exact()).abs();  // in units of pi, within [0, 2)
        if (d > Rational(1)) d = Rational(2) - d;
        return d.to_double() * kPi;
      }
      double d = std::fabs(p.coord() - q.coord());
      return std::min(d, kTau - d);
    }
    case SpaceKind::BinaryShift: {
      const Word& a = p.word();
      const Word& b = q.word();
      long w = p.space().window();
      long lo = std::max(-w, std::min(a.support_begin(), b.support_begin()));
      long hi = std::min(w, std::max(a.support_end(), b.support_end()) - 1);
      double s = 0;
      for (long i = lo; i <= hi; ++i)
        if (a.bit(i) != b.bit(i)) s += std::ldexp(1.0, -static_cast<int>(std::labs(i)));
      return s;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// OpenSet

OpenSet OpenSet::interval(double lo, double hi) {
  if (!(lo >= 0 && hi <= 1 && lo < hi)) throw std::invalid_argument("open interval must satisfy 0 <= lo < hi <= 1");
  OpenSet u(Space::unit_interval(), SetShape::Interval);
  u.lo_ = lo;
  u.hi_ = hi;
  return u;
}

OpenSet OpenSet::arc(double lo, double hi) {
  if (!(lo >= 0 && lo < kTau && lo < hi && hi - lo <= kTau))
    throw std::invalid_argument("arc must satisfy 0 <= lo < 2pi, lo < hi <= lo + 2pi");
  OpenSet u(Space::circle(), SetShape::Arc);
  u.lo_ = lo;
  u.hi_ = hi;
  return u;
}

OpenSet OpenSet::cylinder(const Space& s, long fix_start, std::vector<uint8_t> pattern) {
  if (s.kind() != SpaceKind::BinaryShift) throw std::invalid_argument("cylinder needs a shift space");
  long w = s.window();
  long n = static_cast<long>(pattern.size());
  if (n < 1 || n > 2 * w + 1) throw std::invalid_argument("cylinder must fix between 1 and 2W+1 coordinates");
  if (fix_start < -w || fix_start + n - 1 > w) throw std::invalid_argument("cylinder fixed block outside window");
  for (uint8_t b : pattern)
    if (b > 1) throw std::invalid_argument("cylinder pattern letters must be 0 or 1");
  OpenSet u(s, SetShape::Cylinder);
  u.fix_start_ = fix_start;
  u.pattern_ = std::move(pattern);
  return u;
}

bool OpenSet::contains(const Point& p) const {
  if (!(p.space() == space_)) throw SpaceMismatch();
  switch (shape_) {
    case SetShape::Interval:
      return p.coord() > lo_ && p.coord() < hi_;
    case SetShape::Arc: {
      double rel = p.coord() - lo_;
      if (rel < 0) rel += kTau;
      return rel > 0 && rel < hi_ - lo_;
    }
    case SetShape::Cylinder: {
      for (long i = fix_begin(); i < fix_end(); ++i)
        if (p.word().bit(i) != pattern_[static_cast<size_t>(i - fix_start_)]) return false;
      return true;
    }
  }
  return false;
}

Point OpenSet::center() const {
  switch (shape_) {
    case SetShape::Interval: {
      double mid = 0.5 * (lo_ + hi_);
      return Point::interval(mid);
    }
    case SetShape::Arc:
      return Point::circle(0.5 * (lo_ + hi_));
    case SetShape::Cylinder:
      return Point::shift(space_, Word(pattern_, fix_start_));
  }
  return Point::interval(0.5);
}

std::string OpenSet::str() const {
  switch (shape_) {
    case SetShape::Interval:
      return "(" + std::to_string(lo_) + ", " + std::to_string(hi_) + ")";
    case SetShape::Arc:
      return "arc(" + std::to_string(lo_) + ", " + std::to_string(hi_) + ")";
    case SetShape::Cylinder: {
      std::string s = "[";
      for (uint8_t b : pattern_) s += b ? '1' : '0';
      return s + "]@" + std::to_string(fix_start_);
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Nets and grids

std::vector<OpenSet> epsilon_net(const Space& s, double radius) {
  if (radius <= 0) throw std::invalid_argument("net radius must be positive");
  if (radius >= s.diameter()) throw std::invalid_argument("net radius must be below the space diameter");
  std::vector<OpenSet> net;
  switch (s.kind()) {
    case SpaceKind::UnitInterval: {
      int count = static_cast<int>(std::ceil(1.0 / radius));
      for (int k = 0; k < count; ++k) {
        double c = (k + 0.5) / count;
        net.push_back(OpenSet::interval(std::max(0.0, c - radius), std::min(1.0, c + radius)));
      }
      break;
    }
    case SpaceKind::Circle: {
      int count = static_cast<int>(std::ceil(kTau / radius));
      for (int k = 0; k < count; ++k) {
        double c = (k + 0.5) * kTau / count;
        double lo = c - radius;
        if (lo < 0) lo += kTau;
        if (lo >= kTau) lo -= kTau;
        net.push_back(OpenSet::arc(lo, lo + 2 * radius));
      }
      break;
    }
    case SpaceKind::BinaryShift: {
      int m = 1;
      while (m < s.window() && std::ldexp(1.0, -m) > 2 * radius) ++m;
      int n = 2 * m + 1;
      for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<uint8_t> pattern(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) pattern[static_cast<size_t>(j)] = (mask >> j) & 1;
        net.push_back(OpenSet::cylinder(s, -m, std::move(pattern)));
      }
      break;
    }
  }
  return net;
}

std::vector<Point> sample_grid(const OpenSet& u, int resolution) {
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  std::vector<Point> pts;
  switch (u.shape()) {
    case SetShape::Interval: {
      auto lo = Rational::from_double(u.lo());
      auto hi = Rational::from_double(u.hi());
      for (int k = 1; k <= resolution; ++k) {
        if (lo && hi) {
          try {
            Rational x = *lo + (*hi - *lo) * Rational(k, resolution + 1);
            pts.push_back(Point::interval(x));
            continue;
          } catch (const RationalOverflow&) {
          }
        }
        pts.push_back(Point::interval(u.lo() + (u.hi() - u.lo()) * k / (resolution + 1)));
      }
      break;
    }
    case SetShape::Arc: {
      for (int k = 1; k <= resolution; ++k)
        pts.push_back(Point::circle(u.lo() + (u.hi() - u.lo()) * k / (resolution + 1)));
      break;
    }
    case SetShape::Cylinder: {
      long w = u.space().window();
      std::vector<long> free_idx;
      if (u.fix_begin() - 1 >= -w) free_idx.push_back(u.fix_begin() - 1);
      if (u.fix_end() <= w) free_idx.push_back(u.fix_end());
      Word base(u.pattern(), u.fix_begin());
      for (long mask = 0; mask < (1L << free_idx.size()); ++mask) {
        Word word = base;
        for (size_t j = 0; j < free_idx.size(); ++j)
          if ((mask >> j) & 1) word = word.with_bit(free_idx[j], 1);
        pts.push_back(Point::shift(u.space(), word));
      }
      break;
    }
  }
  return pts;
}

std::vector<Point> space_grid(const Space& s, int resolution) {
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  std::vector<Point> pts;
  switch (s.kind()) {
    case SpaceKind::UnitInterval:
      for (int k = 1; k <= resolution; ++k) pts.push_back(Point::interval(Rational(k, resolution + 1)));
      break;
    case SpaceKind::Circle:
      for (int k = 0; k < resolution; ++k) pts.push_back(Point::circle_over_pi(Rational(2 * k, resolution)));
      break;
    case SpaceKind::BinaryShift: {
      int m = 1;
      while (2 * (m + 1) + 1 <= 62 && (1L << (2 * (m + 1) + 1)) <= std::max(resolution, 8) &&
             m + 1 <= s.window())
        ++m;
      int n = 2 * m + 1;
      for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<uint8_t> letters(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) letters[static_cast<size_t>(j)] = (mask >> j) & 1;
        pts.push_back(Point::shift(s, Word(std::move(letters), -m)));
      }
      break;
    }
  }
  return pts;
}

}  // namespace nadyn
