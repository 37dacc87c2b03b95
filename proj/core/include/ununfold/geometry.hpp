#pragma once

#include <array>
#include <cmath>

namespace ununfold {

struct Point3 {
  double x = 0, y = 0, z = 0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Point3, Point3) = default;
};

inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }
inline Point3 normalized(Point3 a) { return (1.0 / norm(a)) * a; }
inline bool isFinite(Point3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

/// Generic planar vector; the scalar is double in float mode and an interval
/// type when developing pieces for certified predicates.
template <class S>
struct Vec2 {
  S x{}, y{};
};

template <class S>
Vec2<S> operator+(const Vec2<S>& a, const Vec2<S>& b) { return {a.x + b.x, a.y + b.y}; }
template <class S>
Vec2<S> operator-(const Vec2<S>& a, const Vec2<S>& b) { return {a.x - b.x, a.y - b.y}; }

using Point2 = Vec2<double>;

inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }

using Triangle2 = std::array<Point2, 3>;

constexpr double kPi = 3.14159265358979323846;
inline constexpr double degToRad(double d) { return d * kPi / 180.0; }
inline constexpr double radToDeg(double r) { return r * 180.0 / kPi; }

/// Interior angle (degrees) at `apex` of the triangle (apex, p, q).
inline double angleAt(Point3 apex, Point3 p, Point3 q) {
  const Point3 u = p - apex, v = q - apex;
  return radToDeg(std::atan2(norm(cross(u, v)), dot(u, v)));
}

}  // namespace ununfold
