#include "nadyn/map.hpp"

#include <algorithm>
#include <cmath>

namespace nadyn {

namespace {

constexpr double kEvalTol = 1e-12;

}  // namespace

// ---------------------------------------------------------------------------
// PiecewisePoly

PiecewisePoly::PiecewisePoly(const Space& s, std::vector<Rational> breakpoints,
                             std::vector<std::vector<Rational>> piece_coeffs)
    : space_(s), breaks_(std::move(breakpoints)) {
  if (s.kind() == SpaceKind::BinaryShift)
    throw MapConstructionError("piecewise polynomials live on the interval or circle");
  if (breaks_.size() < 2 || piece_coeffs.size() + 1 != breaks_.size())
    throw MapConstructionError("need m+1 breakpoints for m pieces");
  Rational dom_end = s.kind() == SpaceKind::Circle ? Rational(2) : Rational(1);
  if (breaks_.front() != Rational(0) || breaks_.back() != dom_end)
    throw MapConstructionError("breakpoints must span the whole domain");
  for (size_t j = 0; j + 1 < breaks_.size(); ++j)
    if (!(breaks_[j] < breaks_[j + 1])) throw MapConstructionError("breakpoints must be strictly increasing");

  for (auto& coeffs : piece_coeffs) {
    if (coeffs.empty() || coeffs.size() > 3)
      throw MapConstructionError("piece degree must be between 0 and 2");
    PolyPiece piece;
    piece.c0 = coeffs[0];
    if (coeffs.size() > 1) piece.c1 = coeffs[1];
    if (coeffs.size() > 2) piece.c2 = coeffs[2];
    pieces_.push_back(piece);
  }

  for (size_t j = 0; j + 1 < pieces_.size(); ++j) {
    const Rational& t = breaks_[j + 1];
    if (pieces_[j].eval_exact(t) != pieces_[j + 1].eval_exact(t))
      throw MapConstructionError("pieces " + std::to_string(j) + " and " + std::to_string(j + 1) +
                                 " disagree at their shared breakpoint");
  }

  if (s.kind() == SpaceKind::UnitInterval) {
    // Range containment, checked exactly at endpoints and interior vertices.
    for (size_t j = 0; j < pieces_.size(); ++j) {
      const PolyPiece& piece = pieces_[j];
      std::vector<Rational> vals{piece.eval_exact(breaks_[j]), piece.eval_exact(breaks_[j + 1])};
      if (piece.degree() == 2) {
        Rational vertex = -piece.c1 / (Rational(2) * piece.c2);
        if (breaks_[j] < vertex && vertex < breaks_[j + 1]) vals.push_back(piece.eval_exact(vertex));
      }
      for (const Rational& v : vals)
        if (v < Rational(0) || v > Rational(1))
          throw MapConstructionError("piece " + std::to_string(j) + " escapes [0,1]");
    }
  } else {
    // Endpoint compatibility f(0) == f(2pi) mod 2pi.
    Rational d = pieces_.front().eval_exact(Rational(0)) - pieces_.back().eval_exact(Rational(2));
    Rational m = d - Rational(2) * Rational((d / Rational(2)).floor());
    if (!m.is_zero()) throw MapConstructionError("circle map endpoints incompatible mod 2pi");
  }

  dbreaks_.reserve(breaks_.size());
  for (const Rational& b : breaks_) dbreaks_.push_back(b.to_double());
}

int PiecewisePoly::piece_index(double u) const {
  for (size_t j = 0; j + 1 < dbreaks_.size(); ++j)
    if (u <= dbreaks_[j + 1]) return static_cast<int>(j);
  return static_cast<int>(pieces_.size()) - 1;
}

Rational PiecewisePoly::eval_exact(const Rational& u) const {
  for (size_t j = 0; j + 1 < breaks_.size(); ++j)
    if (u <= breaks_[j + 1]) return pieces_[j].eval_exact(u);
  return pieces_.back().eval_exact(u);
}

// ---------------------------------------------------------------------------
// SelfMap

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::Piecewise: return "piecewise";
    case MapKind::ShiftLeft: return "shift_left";
    case MapKind::ShiftRight: return "shift_right";
    case MapKind::Identity: return "identity";
    case MapKind::Rotation: return "rotation";
  }
  return "?";
}

SelfMap SelfMap::piecewise(const Space& s, std::vector<Rational> breakpoints,
                           std::vector<std::vector<Rational>> piece_coeffs, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->space = s;
  impl->kind = MapKind::Piecewise;
  impl->poly.emplace(s, std::move(breakpoints), std::move(piece_coeffs));
  impl->label = std::move(label);
  return SelfMap(std::move(impl));
}

SelfMap SelfMap::identity(const Space& s) {
  auto impl = std::make_shared<Impl>();
  impl->space = s;
  impl->kind = MapKind::Identity;
  impl->label = "identity";
  return SelfMap(std::move(impl));
}

SelfMap SelfMap::shift_left(const Space& s) {
  if (s.kind() != SpaceKind::BinaryShift) throw MapConstructionError("shift maps need a shift space");
  auto impl = std::make_shared<Impl>();
  impl->space = s;
  impl->kind = MapKind::ShiftLeft;
  impl->label = "sigma";
  return SelfMap(std::move(impl));
}

SelfMap SelfMap::shift_right(const Space& s) {
  if (s.kind() != SpaceKind::BinaryShift) throw MapConstructionError("shift maps need a shift space");
  auto impl = std::make_shared<Impl>();
  impl->space = s;
  impl->kind = MapKind::ShiftRight;
  impl->label = "sigma_inverse";
  return SelfMap(std::move(impl));
}

SelfMap SelfMap::rotation(double radians, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->space = Space::circle();
  impl->kind = MapKind::Rotation;
  impl->rotation = radians;
  impl->label = label.empty() ? "rotation(" + std::to_string(radians) + ")" : std::move(label);
  return SelfMap(std::move(impl));
}

bool operator==(const SelfMap& a, const SelfMap& b) {
  if (!(a.space() == b.space()) || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MapKind::Piecewise: return a.poly() == b.poly();
    case MapKind::Rotation: return a.rotation_angle() == b.rotation_angle();
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// Evaluation

Point apply(const SelfMap& f, const Point& p) {
  if (!(p.space() == f.space())) throw SpaceMismatch();
  switch (f.kind()) {
    case MapKind::Identity:
      return p;
    case MapKind::ShiftLeft:
      return Point::shift(p.space(), p.word().shifted_left());
    case MapKind::ShiftRight:
      return Point::shift(p.space(), p.word().shifted_right());
    case MapKind::Rotation:
      return Point::circle(p.coord() + f.rotation_angle());
    case MapKind::Piecewise:
      break;
  }

  const PiecewisePoly& poly = f.poly();
  if (f.space().kind() == SpaceKind::UnitInterval) {
    if (p.exact()) {
      try {
        Rational v = poly.eval_exact(*p.exact());
        return Point::interval_raw(p.space(), v.to_double(), v);
      } catch (const RationalOverflow&) {
      }
    }
    double v = poly.eval(p.coord());
    if (v < -kEvalTol || v > 1 + kEvalTol)
      throw MapConstructionError("piece " + std::to_string(poly.piece_index(p.coord())) +
                                 " sent " + std::to_string(p.coord()) + " outside [0,1]");
    return Point::interval_raw(p.space(), std::clamp(v, 0.0, 1.0), Rational::from_double(std::clamp(v, 0.0, 1.0)));
  }

  // Circle: evaluate in units of pi, reduce mod 2.
  if (p.exact()) {
    try {
      Rational v = poly.eval_exact(*p.exact());
      Rational m = v - Rational(2) * Rational((v / Rational(2)).floor());
      return Point::circle_raw(p.space(), m.to_double() * kPi, m);
    } catch (const RationalOverflow&) {
    }
  }
  double v = poly.eval(p.coord() / kPi);
  return Point::circle_raw(p.space(), v * kPi, std::nullopt);
}

// ---------------------------------------------------------------------------
// Images

namespace {

// Image of the closed normalized range [a, b] under one poly, split into
// monotone segments at interior vertices. Results stay normalized.
void poly_range_image(const PiecewisePoly& poly, double a, double b, std::vector<ImagePart>& out) {
  for (size_t j = 0; j < poly.pieces().size(); ++j) {
    double lo = std::max(a, poly.dbreak(j));
    double hi = std::min(b, poly.dbreak(j + 1));
    if (lo > hi) continue;
    if (lo == hi && !(a == b)) continue;  // single-point overlap of a real range
    const PolyPiece& piece = poly.pieces()[j];
    std::vector<double> knots{lo, hi};
    if (piece.degree() == 2) {
      double vertex = -piece.c1.to_double() / (2 * piece.c2.to_double());
      if (vertex > lo && vertex < hi) knots.insert(knots.begin() + 1, vertex);
    }
    for (size_t k = 0; k + 1 < knots.size(); ++k) {
      double va = piece.eval(knots[k]);
      double vb = piece.eval(knots[k + 1]);
      out.push_back({std::min(va, vb), std::max(va, vb)});
    }
  }
}

void merge_parts(std::vector<ImagePart>& parts) {
  if (parts.empty()) return;
  std::sort(parts.begin(), parts.end(), [](const ImagePart& x, const ImagePart& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  std::vector<ImagePart> merged{parts.front()};
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, parts[i].hi);
    else
      merged.push_back(parts[i]);
  }
  parts = std::move(merged);
}

// Normalized circle value range -> parts in radians, reduced into [0, 2pi].
void reduce_circle_parts(std::vector<ImagePart>& raw, std::vector<ImagePart>& out) {
  for (const ImagePart& part : raw) {
    double span = part.hi - part.lo;
    if (span >= 2.0) {
      out.push_back({0, kTau});
      continue;
    }
    double lo = part.lo - 2.0 * std::floor(part.lo / 2.0);
    double hi = lo + span;
    if (hi <= 2.0) {
      out.push_back({lo * kPi, hi * kPi});
    } else {
      out.push_back({lo * kPi, kTau});
      out.push_back({0, (hi - 2.0) * kPi});
    }
  }
}

ImageSet image_of_ranges(const SelfMap& f, const std::vector<ImagePart>& ranges_norm) {
  ImageSet result;
  result.space = f.space();
  std::vector<ImagePart> raw;
  for (const ImagePart& r : ranges_norm) poly_range_image(f.poly(), r.lo, r.hi, raw);
  if (f.space().kind() == SpaceKind::UnitInterval) {
    for (ImagePart& part : raw) {
      part.lo = std::clamp(part.lo, 0.0, 1.0);
      part.hi = std::clamp(part.hi, 0.0, 1.0);
    }
    result.parts = std::move(raw);
  } else {
    reduce_circle_parts(raw, result.parts);
  }
  merge_parts(result.parts);
  return result;
}

OpenSet shifted_cylinder(const OpenSet& u, int direction) {
  long start = u.fix_begin() + direction;
  long w = u.space().window();
  if (start < -w || start + static_cast<long>(u.pattern().size()) - 1 > w)
    throw MapConstructionError("image cylinder leaves the representable window; widen W");
  return OpenSet::cylinder(u.space(), start, u.pattern());
}

}  // namespace

ImageSet image_of(const SelfMap& f, const OpenSet& u) {
  if (!(u.space() == f.space())) throw SpaceMismatch();
  ImageSet result;
  result.space = f.space();
  switch (f.kind()) {
    case MapKind::Identity:
      if (u.shape() == SetShape::Cylinder) {
        result.cylinder = u;
      } else if (u.shape() == SetShape::Interval) {
        result.parts.push_back({u.lo(), u.hi()});
      } else {
        double hi = u.hi();
        if (hi <= kTau) {
          result.parts.push_back({u.lo(), hi});
        } else {
          result.parts.push_back({u.lo(), kTau});
          result.parts.push_back({0, hi - kTau});
        }
      }
      return result;
    case MapKind::ShiftLeft:
      result.cylinder = shifted_cylinder(u, -1);
      return result;
    case MapKind::ShiftRight:
      result.cylinder = shifted_cylinder(u, +1);
      return result;
    case MapKind::Rotation: {
      double lo = u.lo() + f.rotation_angle();
      lo -= kTau * std::floor(lo / kTau);
      double hi = lo + (u.hi() - u.lo());
      if (hi <= kTau) {
        result.parts.push_back({lo, hi});
      } else {
        result.parts.push_back({lo, kTau});
        result.parts.push_back({0, hi - kTau});
      }
      merge_parts(result.parts);
      return result;
    }
    case MapKind::Piecewise:
      break;
  }
  std::vector<ImagePart> ranges;
  if (u.shape() == SetShape::Interval) {
    ranges.push_back({u.lo(), u.hi()});
  } else {
    double lo = u.lo() / kPi, hi = u.hi() / kPi;
    if (hi <= 2.0) {
      ranges.push_back({lo, hi});
    } else {
      ranges.push_back({lo, 2.0});
      ranges.push_back({0.0, hi - 2.0});
    }
  }
  return image_of_ranges(f, ranges);
}

ImageSet image_of(const SelfMap& f, const ImageSet& s) {
  if (!(s.space == f.space())) throw SpaceMismatch();
  ImageSet result;
  result.space = f.space();
  switch (f.kind()) {
    case MapKind::Identity:
      return s;
    case MapKind::ShiftLeft:
      result.cylinder = shifted_cylinder(*s.cylinder, -1);
      return result;
    case MapKind::ShiftRight:
      result.cylinder = shifted_cylinder(*s.cylinder, +1);
      return result;
    case MapKind::Rotation: {
      std::vector<ImagePart> parts;
      for (const ImagePart& part : s.parts) {
        double lo = part.lo + f.rotation_angle();
        lo -= kTau * std::floor(lo / kTau);
        double hi = lo + (part.hi - part.lo);
        if (hi <= kTau) {
          parts.push_back({lo, hi});
        } else {
          parts.push_back({lo, kTau});
          parts.push_back({0, hi - kTau});
        }
      }
      result.parts = std::move(parts);
      merge_parts(result.parts);
      return result;
    }
    case MapKind::Piecewise:
      break;
  }
  std::vector<ImagePart> ranges;
  double scale = f.space().kind() == SpaceKind::Circle ? kPi : 1.0;
  for (const ImagePart& part : s.parts) ranges.push_back({part.lo / scale, part.hi / scale});
  return image_of_ranges(f, ranges);
}

bool ImageSet::has_interior() const {
  if (cylinder) return true;
  for (const ImagePart& part : parts)
    if (!part.degenerate()) return true;
  return false;
}

double ImageSet::diameter() const {
  if (space.kind() != SpaceKind::UnitInterval || parts.empty())
    throw std::logic_error("exact diameter is only tracked on the unit interval");
  double lo = parts.front().lo, hi = parts.front().hi;
  for (const ImagePart& part : parts) {
    lo = std::min(lo, part.lo);
    hi = std::max(hi, part.hi);
  }
  return hi - lo;
}

// ---------------------------------------------------------------------------
// Structural properties

bool is_feeble_open(const SelfMap& f) {
  if (f.kind() != MapKind::Piecewise) return true;
  for (const PolyPiece& piece : f.poly().pieces())
    if (piece.is_constant()) return false;
  return true;
}

namespace {

struct RatRange {
  Rational lo, hi;
};

std::vector<RatRange> exact_piece_ranges(const PiecewisePoly& poly) {
  std::vector<RatRange> ranges;
  for (size_t j = 0; j < poly.pieces().size(); ++j) {
    const PolyPiece& piece = poly.pieces()[j];
    std::vector<Rational> vals{piece.eval_exact(poly.breakpoints()[j]),
                               piece.eval_exact(poly.breakpoints()[j + 1])};
    if (piece.degree() == 2) {
      Rational vertex = -piece.c1 / (Rational(2) * piece.c2);
      if (poly.breakpoints()[j] < vertex && vertex < poly.breakpoints()[j + 1])
        vals.push_back(piece.eval_exact(vertex));
    }
    Rational lo = vals[0], hi = vals[0];
    for (const Rational& v : vals) {
      if (v < lo) lo = v;
      if (hi < v) hi = v;
    }
    ranges.push_back({lo, hi});
  }
  return ranges;
}

bool ranges_cover(std::vector<RatRange> ranges, const Rational& begin, const Rational& end) {
  std::sort(ranges.begin(), ranges.end(),
            [](const RatRange& a, const RatRange& b) { return a.lo < b.lo; });
  Rational reach = begin;
  for (const RatRange& r : ranges) {
    if (r.lo > reach) return false;
    if (reach < r.hi) reach = r.hi;
    if (reach >= end) return true;
  }
  return reach >= end;
}

}  // namespace

bool is_surjective(const SelfMap& f) {
  if (f.kind() != MapKind::Piecewise) return true;
  std::vector<RatRange> ranges = exact_piece_ranges(f.poly());
  if (f.space().kind() == SpaceKind::UnitInterval)
    return ranges_cover(std::move(ranges), Rational(0), Rational(1));
  // Circle: reduce ranges mod 2 before checking cover of [0, 2].
  std::vector<RatRange> reduced;
  for (const RatRange& r : ranges) {
    if (r.hi - r.lo >= Rational(2)) return true;
    Rational lo = r.lo - Rational(2) * Rational((r.lo / Rational(2)).floor());
    Rational hi = lo + (r.hi - r.lo);
    if (hi <= Rational(2)) {
      reduced.push_back({lo, hi});
    } else {
      reduced.push_back({lo, Rational(2)});
      reduced.push_back({Rational(0), hi - Rational(2)});
    }
  }
  return ranges_cover(std::move(reduced), Rational(0), Rational(2));
}

// ---------------------------------------------------------------------------
// Preimages

namespace {

constexpr double kMergeTol = 1e-9;

// Solutions of piece(u) = v inside [lo, hi] (normalized). Constant pieces
// matching v contribute their endpoints.
void solve_piece(const PolyPiece& piece, double v, double lo, double hi, std::vector<double>& out) {
  auto push = [&](double u) {
    if (u >= lo - kEvalTol && u <= hi + kEvalTol) out.push_back(std::clamp(u, lo, hi));
  };
  switch (piece.degree()) {
    case 0:
      if (std::fabs(piece.c0.to_double() - v) <= kEvalTol) {
        out.push_back(lo);
        out.push_back(hi);
      }
      break;
    case 1:
      push((v - piece.c0.to_double()) / piece.c1.to_double());
      break;
    case 2: {
      double a = piece.c2.to_double(), b = piece.c1.to_double(), c = piece.c0.to_double() - v;
      double disc = b * b - 4 * a * c;
      if (disc < -kEvalTol) break;
      disc = std::max(disc, 0.0);
      double root = std::sqrt(disc);
      push((-b - root) / (2 * a));
      if (root > 0) push((-b + root) / (2 * a));
      break;
    }
  }
}

void append_exact_linear_solutions(const PiecewisePoly& poly, const Rational& v,
                                   std::vector<std::pair<double, std::optional<Rational>>>& out) {
  for (size_t j = 0; j < poly.pieces().size(); ++j) {
    const PolyPiece& piece = poly.pieces()[j];
    if (piece.degree() != 1) continue;
    try {
      Rational u = (v - piece.c0) / piece.c1;
      if (u >= poly.breakpoints()[j] && u <= poly.breakpoints()[j + 1]) out.push_back({u.to_double(), u});
    } catch (const RationalOverflow&) {
    }
  }
}

}  // namespace

std::vector<Point> preimages(const SelfMap& f, const Point& p) {
  if (!(p.space() == f.space())) throw SpaceMismatch();
  switch (f.kind()) {
    case MapKind::Identity:
      return {p};
    case MapKind::ShiftLeft:
      return {Point::shift(p.space(), p.word().shifted_right())};
    case MapKind::ShiftRight:
      return {Point::shift(p.space(), p.word().shifted_left())};
    case MapKind::Rotation:
      return {Point::circle(p.coord() - f.rotation_angle())};
    case MapKind::Piecewise:
      break;
  }

  const PiecewisePoly& poly = f.poly();
  bool circle = f.space().kind() == SpaceKind::Circle;
  double v = circle ? p.coord() / kPi : p.coord();

  std::vector<std::pair<double, std::optional<Rational>>> sols;
  for (size_t j = 0; j < poly.pieces().size(); ++j) {
    double lo = poly.dbreak(j), hi = poly.dbreak(j + 1);
    std::vector<double> targets{v};
    if (circle) {
      // Piece values may exceed [0,2); solve against every mod-2 translate
      // that meets the piece's value range.
      const PolyPiece& piece = poly.pieces()[j];
      std::vector<double> probe{piece.eval(lo), piece.eval(hi)};
      if (piece.degree() == 2) {
        double vertex = -piece.c1.to_double() / (2 * piece.c2.to_double());
        if (vertex > lo && vertex < hi) probe.push_back(piece.eval(vertex));
      }
      double vmin = *std::min_element(probe.begin(), probe.end());
      double vmax = *std::max_element(probe.begin(), probe.end());
      targets.clear();
      for (long k = static_cast<long>(std::floor((vmin - v) / 2.0)) - 1;
           v + 2.0 * static_cast<double>(k) <= vmax + kEvalTol; ++k) {
        double t = v + 2.0 * static_cast<double>(k);
        if (t >= vmin - kEvalTol) targets.push_back(t);
      }
    }
    std::vector<double> roots;
    for (double t : targets) solve_piece(poly.pieces()[j], t, lo, hi, roots);
    for (double u : roots) sols.push_back({u, std::nullopt});
  }
  if (!circle && p.exact()) append_exact_linear_solutions(poly, *p.exact(), sols);
  if (circle && p.exact()) {
    // Exact path only for targets inside [0,2); good enough for the fixtures.
    append_exact_linear_solutions(poly, *p.exact(), sols);
  }

  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<double, std::optional<Rational>>> kept;
  for (const auto& s : sols) {
    if (!kept.empty() && std::fabs(s.first - kept.back().first) < kMergeTol) {
      if (!kept.back().second && s.second) kept.back() = s;  // prefer the exact representative
      continue;
    }
    kept.push_back(s);
  }
  if (circle && kept.size() > 1 && kept.back().first - kept.front().first > 2.0 - kMergeTol)
    kept.pop_back();  // 0 and 2 are the same angle
  std::vector<Point> result;
  for (const auto& s : kept) {
    if (circle)
      result.push_back(s.second ? Point::circle_over_pi(*s.second) : Point::circle(s.first * kPi));
    else
      result.push_back(s.second ? Point::interval(*s.second) : Point::interval(s.first));
  }
  if (result.empty() && is_surjective(f))
    throw std::logic_error("surjective map returned no preimage; solver inconsistency");
  return result;
}

}  // namespace nadyn
