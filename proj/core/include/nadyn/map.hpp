#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nadyn/space.hpp"

namespace nadyn {

// Raised when a map construction violates continuity, range containment or
// the degree cap, or when evaluation escapes the codomain.
struct MapConstructionError : std::invalid_argument {
  explicit MapConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

// Polynomial of degree <= 2 with exact rational coefficients, written in the
// map's normalized coordinate (the raw coordinate on [0,1]; angle/pi on the
// circle, so that every fixture's coefficients stay rational).
struct PolyPiece {
  Rational c0, c1, c2;
  int degree() const { return !c2.is_zero() ? 2 : (!c1.is_zero() ? 1 : 0); }
  bool is_constant() const { return degree() == 0; }
  Rational eval_exact(const Rational& u) const { return c0 + u * (c1 + u * c2); }
  double eval(double u) const { return c0.to_double() + u * (c1.to_double() + u * c2.to_double()); }
};

// Continuous piecewise polynomial over [0,1] (interval) or [0,2] in units of
// pi (circle). Validated at construction: strictly increasing breakpoints
// spanning the domain, exact continuity at interior breakpoints, values
// inside the codomain, and endpoint compatibility mod 2 for circle maps.
class PiecewisePoly {
public:
  PiecewisePoly(const Space& s, std::vector<Rational> breakpoints,
                std::vector<std::vector<Rational>> piece_coeffs);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<PolyPiece>& pieces() const { return pieces_; }

  // Breakpoint inputs resolve to the left piece; continuity makes the value
  // unambiguous either way.
  int piece_index(double u) const;
  double eval(double u) const { return pieces_[static_cast<size_t>(piece_index(u))].eval(u); }
  Rational eval_exact(const Rational& u) const;

  double dbreak(size_t j) const { return dbreaks_[j]; }

  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    if (a.breaks_ != b.breaks_ || a.pieces_.size() != b.pieces_.size()) return false;
    for (size_t j = 0; j < a.pieces_.size(); ++j)
      if (a.pieces_[j].c0 != b.pieces_[j].c0 || a.pieces_[j].c1 != b.pieces_[j].c1 ||
          a.pieces_[j].c2 != b.pieces_[j].c2)
        return false;
    return true;
  }

private:
  Space space_ = Space::unit_interval();
  std::vector<Rational> breaks_;
  std::vector<PolyPiece> pieces_;
  std::vector<double> dbreaks_;
};

enum class MapKind { Piecewise, ShiftLeft, ShiftRight, Identity, Rotation };

std::string to_string(MapKind k);

// An exactly represented continuous self-map of one of the three spaces.
// Value type; copies are O(1).
class SelfMap {
public:
  static SelfMap piecewise(const Space& s, std::vector<Rational> breakpoints,
                           std::vector<std::vector<Rational>> piece_coeffs, std::string label = "");
  static SelfMap identity(const Space& s);
  static SelfMap shift_left(const Space& s);
  static SelfMap shift_right(const Space& s);
  static SelfMap rotation(double radians, std::string label = "");

  MapKind kind() const { return impl_->kind; }
  const Space& space() const { return impl_->space; }
  const PiecewisePoly& poly() const { return *impl_->poly; }
  double rotation_angle() const { return impl_->rotation; }
  const std::string& label() const { return impl_->label; }

  // Structural equality; labels are ignored.
  friend bool operator==(const SelfMap& a, const SelfMap& b);

private:
  struct Impl {
    Space space = Space::unit_interval();
    MapKind kind = MapKind::Identity;
    std::optional<PiecewisePoly> poly;
    double rotation = 0;
    std::string label;
  };
  explicit SelfMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// One evaluation step x -> f(x).
Point apply(const SelfMap& f, const Point& p);

// Closed set in interval/circle coordinates; degenerate when lo == hi.
struct ImagePart {
  double lo, hi;
  bool degenerate() const { return lo == hi; }
};

// Exact image of an open set (its closure; the two have equal closure and
// diameter for continuous maps). Interval/circle images are maximal closed
// parts; shift images stay cylinders.
struct ImageSet {
  Space space = Space::unit_interval();
  std::vector<ImagePart> parts;       // interval (coordinates) / circle (radians)
  std::optional<OpenSet> cylinder;    // shift
  bool has_interior() const;
  double diameter() const;            // unit interval only
};

ImageSet image_of(const SelfMap& f, const OpenSet& u);
ImageSet image_of(const SelfMap& f, const ImageSet& s);

// Exact for continuous piecewise polynomials: true iff no piece is constant
// (a non-constant piece maps open intervals onto sets with interior).
// Shifts, rotations and the identity are homeomorphisms.
bool is_feeble_open(const SelfMap& f);

// True iff the union of the exact piece images covers the codomain.
bool is_surjective(const SelfMap& f);

// All solutions of f(x) = p, solved per piece; for a constant piece that
// matches p the piece endpoints stand in for the solution plateau so the
// result stays finite. Duplicates merged at 1e-9.
std::vector<Point> preimages(const SelfMap& f, const Point& p);

}  // namespace nadyn
