#pragma once

#include "ununfold/constructions.hpp"

namespace ununfold::detail {

inline Point3 unitNormal(const Triangle3& t) { return normalized(cross(t[1] - t[0], t[2] - t[0])); }

/// Signed distance of p from the plane of t, positive on the outward side.
inline double planeClearance(const Triangle3& t, Point3 p) { return dot(p - t[0], unitNormal(t)); }

inline double inradius(const Triangle3& t) {
  const double a = distance(t[1], t[2]), b = distance(t[2], t[0]), c = distance(t[0], t[1]);
  return norm(cross(t[1] - t[0], t[2] - t[0])) / (a + b + c);
}

inline Point3 incenter(const Triangle3& t) {
  const double a = distance(t[1], t[2]), b = distance(t[2], t[0]), c = distance(t[0], t[1]);
  return (1.0 / (a + b + c)) * (a * t[0] + b * t[1] + c * t[2]);
}

/// Whether p projects strictly inside t along t's normal.
inline bool projectsInside(const Triangle3& t, Point3 p) {
  const Point3 n = unitNormal(t);
  for (int i = 0; i < 3; ++i) {
    const Point3 a = t[i], b = t[(i + 1) % 3];
    if (!(dot(cross(b - a, p - a), n) > 0)) return false;
  }
  return true;
}

}  // namespace ununfold::detail
