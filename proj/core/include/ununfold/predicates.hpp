#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <type_traits>

#include "ununfold/error.hpp"
#include "ununfold/geometry.hpp"
#include "ununfold/interval.hpp"

namespace ununfold {

/// Float: filtered double predicates with the 1e-9 touch tolerance.
/// Interval: outward-rounded intervals, escalating to 256-bit when needed.
enum class Precision { Float, Interval };

std::string_view toString(Precision p) noexcept;
std::optional<Precision> parsePrecision(std::string_view text) noexcept;

enum class Orientation { Left, Right, Collinear, Indeterminate };

/// Sign of the signed area of (a, b, c). In float mode the sign is exact for
/// the given doubles (adaptive fallback to an error-free expansion). In
/// interval mode the result is Indeterminate only if neither a double nor a
/// 256-bit enclosure excludes zero.
Orientation orient2d(Point2 a, Point2 b, Point2 c, Precision mode = Precision::Float);

enum class OverlapClass { Disjoint, TouchOnly, Overlap, Indeterminate };

std::string_view toString(OverlapClass c) noexcept;

/// Coincidence tolerance for float-mode classification (model units).
inline constexpr double kTouchTolerance = 1e-9;

struct FloatOverlap {
  OverlapClass cls;
  /// Smallest, over the six edge axes, of the deepest penetration of the
  /// other triangle past the edge line; positive iff interiors overlap.
  double margin;
};

/// Float-mode classification with penetration margin. Throws DegenerateInput.
FloatOverlap classifyTrianglesFloat(const Triangle2& t1, const Triangle2& t2, double tol = kTouchTolerance);

/// Interior-overlap classification of two planar triangles. Shared edges and
/// vertices are TouchOnly. Throws DegenerateInput for zero-area triangles.
OverlapClass trianglesInteriorOverlap(const Triangle2& t1, const Triangle2& t2,
                                      Precision mode = Precision::Interval);

namespace detail {

/// Sign of orient(a, b, w), exactly zero when w coincides bitwise with a or b
/// (shared corners carried through a development).
template <class S>
Sign sideOfLine(const Vec2<S>& a, const Vec2<S>& b, const Vec2<S>& w) {
  auto same = [](const Vec2<S>& p, const Vec2<S>& q) {
    if constexpr (std::is_same_v<S, double>) {
      return p.x == q.x && p.y == q.y;
    } else {
      return p.x.identical(q.x) && p.y.identical(q.y);
    }
  };
  if (same(w, a) || same(w, b)) return Sign::Zero;
  return signOf((b.x - a.x) * (w.y - a.y) - (b.y - a.y) * (w.x - a.x));
}

inline Sign flip(Sign s) {
  if (s == Sign::Positive) return Sign::Negative;
  if (s == Sign::Negative) return Sign::Positive;
  return s;
}

/// Separating-axis classification with certified signs. Each of the six edge
/// lines either certainly fails to separate (some vertex of the other
/// triangle strictly inside), strictly separates, weakly separates, or is
/// undecided.
template <class S>
OverlapClass classifyCertified(const std::array<Vec2<S>, 3>& t1, const std::array<Vec2<S>, 3>& t2) {
  const std::array<const std::array<Vec2<S>, 3>*, 2> tris{&t1, &t2};
  std::array<Sign, 2> orientation{};
  for (int i = 0; i < 2; ++i) {
    const auto& t = *tris[i];
    orientation[i] = signOf((t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x));
    if (orientation[i] == Sign::Zero) throw Error(ErrorCode::DegenerateInput, "zero-area triangle");
    if (orientation[i] == Sign::Unknown) return OverlapClass::Indeterminate;
  }
  bool anyWeak = false, allBlocked = true;
  for (int i = 0; i < 2; ++i) {
    const auto& t = *tris[i];
    const auto& other = *tris[1 - i];
    for (int e = 0; e < 3; ++e) {
      const auto& a = t[e];
      const auto& b = t[(e + 1) % 3];
      bool blocked = false, unknown = false, touching = false;
      for (const auto& w : other) {
        Sign s = sideOfLine(a, b, w);
        if (orientation[i] == Sign::Negative) s = flip(s);
        if (s == Sign::Positive) blocked = true;
        if (s == Sign::Unknown) unknown = true;
        if (s == Sign::Zero) touching = true;
      }
      if (blocked) continue;
      allBlocked = false;
      if (unknown) continue;
      if (!touching) return OverlapClass::Disjoint;
      anyWeak = true;
    }
  }
  if (allBlocked) return OverlapClass::Overlap;
  return anyWeak ? OverlapClass::TouchOnly : OverlapClass::Indeterminate;
}

}  // namespace detail

/// The chain-versus-pentagon argument for a hat whose unfolded band bases form
/// a chain of three unit edges turning by the same interior angle. The first
/// edge runs from (0,0) to (1,0); the chain turns left.
struct PentagonMargin {
  double interiorAngleDeg = 0;
  /// How far the chain's end point lies past the first edge's perpendicular
  /// bisector, towards the chain's start (positive: crossed).
  IntervalMp endOffset;
  /// Height above the first edge where the last edge crosses the bisector.
  std::optional<IntervalMp> crossingHeight;
  /// Height of the regular-pentagon vertex on the bisector: tan(72)/2.
  IntervalMp pentagonHeight;
  /// Altitude of the isosceles crown triangle on the first edge.
  IntervalMp crownAltitude;

  Sign crossesBisector() const { return endOffset.sign(); }
  /// Crossing is certified and occurs below the pentagon vertex.
  bool crossesCloserThanPentagon() const;
  /// The crown on the first edge reaches past the crossing point, so it
  /// overlaps the band triangle on the last edge.
  bool crownOverlapsLastBand() const;
  /// The end point's offset cannot be distinguished from zero.
  bool boundaryCoincident() const { return endOffset.containsZero(); }
};

PentagonMargin pentagonMargin(double interiorAngleDeg, double crownApexDeg = 10.0);

}  // namespace ununfold
