#include "ununfold/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ununfold {

std::string_view toString(Precision p) noexcept { return p == Precision::Float ? "float" : "interval"; }

std::optional<Precision> parsePrecision(std::string_view text) noexcept {
  if (text == "float") return Precision::Float;
  if (text == "interval") return Precision::Interval;
  return std::nullopt;
}

std::string_view toString(OverlapClass c) noexcept {
  switch (c) {
    case OverlapClass::Disjoint: return "disjoint";
    case OverlapClass::TouchOnly: return "touch";
    case OverlapClass::Overlap: return "overlap";
    case OverlapClass::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

// --- Error-free transformations and expansion arithmetic -------------------

inline void twoSum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void twoProduct(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Sign of an exact sum of doubles. Grow-expansion keeps a nonoverlapping
// expansion with components in increasing magnitude; its largest nonzero
// component carries the sign of the sum.
Sign expansionSign(const std::vector<double>& terms) {
  std::vector<double> expansion;
  expansion.reserve(terms.size() * 2);
  for (double t : terms) {
    double q = t;
    std::vector<double> next;
    next.reserve(expansion.size() + 1);
    for (double e : expansion) {
      double s, err;
      twoSum(q, e, s, err);
      if (err != 0) next.push_back(err);
      q = s;
    }
    if (q != 0) next.push_back(q);
    expansion.swap(next);
  }
  return expansion.empty() ? Sign::Zero : signOf(expansion.back());
}

Sign orient2dExact(Point2 a, Point2 b, Point2 c) {
  double x1, e1, y1, f1, y2, f2, x2, e2;
  twoSum(a.x, -c.x, x1, e1);
  twoSum(b.y, -c.y, y1, f1);
  twoSum(a.y, -c.y, y2, f2);
  twoSum(b.x, -c.x, x2, e2);
  std::vector<double> terms;
  auto addProduct = [&](double p, double q, double sign) {
    double hi, lo;
    twoProduct(p, q, hi, lo);
    terms.push_back(sign * hi);
    terms.push_back(sign * lo);
  };
  for (double l : {x1, e1}) {
    for (double r : {y1, f1}) addProduct(l, r, 1.0);
  }
  for (double l : {y2, f2}) {
    for (double r : {x2, e2}) addProduct(l, r, -1.0);
  }
  return expansionSign(terms);
}

Sign orient2dFloat(Point2 a, Point2 b, Point2 c) {
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
  constexpr double errBound = (3.0 + 16.0 * eps) * eps;
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = errBound * (std::abs(left) + std::abs(right));
  if (det > bound || -det > bound) return signOf(det);
  return orient2dExact(a, b, c);
}

template <class S>
std::array<Vec2<S>, 3> lift(const Triangle2& t) {
  std::array<Vec2<S>, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = {S(t[i].x), S(t[i].y)};
  return out;
}

template <class S>
Sign orientInterval(Point2 a, Point2 b, Point2 c) {
  const Vec2<S> pa{S(a.x), S(a.y)}, pb{S(b.x), S(b.y)}, pc{S(c.x), S(c.y)};
  return signOf((pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x));
}

Orientation toOrientation(Sign s) {
  switch (s) {
    case Sign::Positive: return Orientation::Left;
    case Sign::Negative: return Orientation::Right;
    case Sign::Zero: return Orientation::Collinear;
    case Sign::Unknown: break;
  }
  return Orientation::Indeterminate;
}

}  // namespace

Orientation orient2d(Point2 a, Point2 b, Point2 c, Precision mode) {
  if (mode == Precision::Float) return toOrientation(orient2dFloat(a, b, c));
  Sign s = orientInterval<IntervalF64>(a, b, c);
  if (s == Sign::Unknown) s = orientInterval<IntervalMp>(a, b, c);
  return toOrientation(s);
}

FloatOverlap classifyTrianglesFloat(const Triangle2& t1, const Triangle2& t2, double tol) {
  const std::array<const Triangle2*, 2> tris{&t1, &t2};
  std::array<double, 2> orientation{};
  for (int i = 0; i < 2; ++i) {
    const Triangle2& t = *tris[i];
    const Sign s = orient2dFloat(t[0], t[1], t[2]);
    if (s == Sign::Zero) throw Error(ErrorCode::DegenerateInput, "zero-area triangle");
    orientation[i] = s == Sign::Positive ? 1.0 : -1.0;
  }
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i) {
    const Triangle2& t = *tris[i];
    const Triangle2& other = *tris[1 - i];
    for (int e = 0; e < 3; ++e) {
      const Point2 a = t[e], b = t[(e + 1) % 3];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      double deepest = -std::numeric_limits<double>::infinity();
      for (const Point2& w : other) {
        const double d = orientation[i] * ((b.x - a.x) * (w.y - a.y) - (b.y - a.y) * (w.x - a.x)) / len;
        deepest = std::max(deepest, d);
      }
      margin = std::min(margin, deepest);
    }
  }
  OverlapClass cls = OverlapClass::TouchOnly;
  if (margin > tol) cls = OverlapClass::Overlap;
  if (margin < -tol) cls = OverlapClass::Disjoint;
  return {cls, margin};
}

OverlapClass trianglesInteriorOverlap(const Triangle2& t1, const Triangle2& t2, Precision mode) {
  if (mode == Precision::Float) return classifyTrianglesFloat(t1, t2).cls;
  for (const Triangle2* t : {&t1, &t2}) {
    if (orient2d((*t)[0], (*t)[1], (*t)[2], Precision::Interval) == Orientation::Collinear) {
      throw Error(ErrorCode::DegenerateInput, "zero-area triangle");
    }
  }
  const OverlapClass fast = detail::classifyCertified(lift<IntervalF64>(t1), lift<IntervalF64>(t2));
  if (fast != OverlapClass::Indeterminate) return fast;
  return detail::classifyCertified(lift<IntervalMp>(t1), lift<IntervalMp>(t2));
}

// ---------------------------------------------------------------------------

bool PentagonMargin::crossesCloserThanPentagon() const {
  return crossesBisector() == Sign::Positive && crossingHeight &&
         (pentagonHeight - *crossingHeight).sign() == Sign::Positive;
}

bool PentagonMargin::crownOverlapsLastBand() const {
  return crossesCloserThanPentagon() && (crownAltitude - *crossingHeight).sign() == Sign::Positive;
}

PentagonMargin pentagonMargin(double interiorAngleDeg, double crownApexDeg) {
  const double turn = 180.0 - interiorAngleDeg;
  const IntervalMp c1 = cosDeg(turn), s1 = sinDeg(turn);
  const IntervalMp c2 = cosDeg(2.0 * turn), s2 = sinDeg(2.0 * turn);
  const IntervalMp one(1.0), half(0.5);

  const Vec2<IntervalMp> p2{one + c1, s1};
  const Vec2<IntervalMp> p3{p2.x + c2, p2.y + s2};

  PentagonMargin out;
  out.interiorAngleDeg = interiorAngleDeg;
  out.endOffset = half - p3.x;
  out.pentagonHeight = half * sinDeg(72.0) / cosDeg(72.0);
  out.crownAltitude = half * cosDeg(crownApexDeg / 2.0) / sinDeg(crownApexDeg / 2.0);
  if (out.endOffset.sign() == Sign::Positive && (p2.x - half).sign() == Sign::Positive) {
    const IntervalMp t = (p2.x - half) / (p2.x - p3.x);
    out.crossingHeight = p2.y + t * (p3.y - p2.y);
  }
  return out;
}

}  // namespace ununfold
