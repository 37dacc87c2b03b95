#pragma once

#include <array>
#include <span>
#include <vector>

#include "ununfold/error.hpp"
#include "ununfold/mesh.hpp"
#include "ununfold/unfold.hpp"

namespace ununfold::detail {

template <class S>
using Tri2 = std::array<Vec2<S>, 3>;

template <class S>
struct Vec3S {
  S x, y, z;
};

template <class S>
Vec3S<S> lift3(Point3 p) {
  return {S(p.x), S(p.y), S(p.z)};
}

template <class S>
Vec3S<S> sub3(const Vec3S<S>& a, const Vec3S<S>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <class S>
S dot3(const Vec3S<S>& a, const Vec3S<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Vec3S<S> cross3(const Vec3S<S>& a, const Vec3S<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
S sqrtS(const S& v) {
  using std::sqrt;
  return sqrt(v);
}

/// Planar image of C given planar images of A and B, with C to the left of
/// the directed segment A->B. Distances to A and B are those in space.
template <class S>
Vec2<S> placeThird(const Vec2<S>& pa, const Vec2<S>& pb, Point3 a, Point3 b, Point3 c) {
  const Vec3S<S> A = lift3<S>(a);
  const Vec3S<S> ab = sub3(lift3<S>(b), A);
  const Vec3S<S> ac = sub3(lift3<S>(c), A);
  const S denom = dot3(ab, ab);
  const S t = dot3(ac, ab) / denom;
  const Vec3S<S> n = cross3(ab, ac);
  const S h = sqrtS(dot3(n, n)) / denom;
  const Vec2<S> u = pb - pa;
  return {pa.x + t * u.x - h * u.y, pa.y + t * u.y + h * u.x};
}

/// Lays out the faces of `plan` in order. Corners shared with the parent are
/// copied from the parent's image, so they are bitwise identical.
template <class S>
std::vector<Tri2<S>> layoutPlan(const SurfaceMesh& mesh, std::span<const DevelopStep> plan) {
  std::vector<Tri2<S>> out;
  out.reserve(plan.size());
  std::vector<std::size_t> slot(mesh.faceCount(), static_cast<std::size_t>(-1));
  for (const DevelopStep& step : plan) {
    const Face& f = mesh.face(step.face);
    const auto& fe = mesh.faceEdges(step.face);
    Tri2<S> tri;
    int i = 0;
    if (step.parent == kNoFace) {
      for (int k = 1; k < 3; ++k) {
        if (fe[k] < fe[i]) i = k;
      }
      const VertexId p = f[i], q = f[(i + 1) % 3], r = f[(i + 2) % 3];
      const Vec3S<S> pq = sub3(lift3<S>(mesh.vertex(q)), lift3<S>(mesh.vertex(p)));
      tri[i] = {S(0.0), S(0.0)};
      tri[(i + 1) % 3] = {sqrtS(dot3(pq, pq)), S(0.0)};
      tri[(i + 2) % 3] = placeThird<S>(tri[i], tri[(i + 1) % 3], mesh.vertex(p), mesh.vertex(q), mesh.vertex(r));
    } else {
      while (fe[i] != step.edge) ++i;
      const std::size_t ps = slot.at(step.parent);
      if (ps == static_cast<std::size_t>(-1)) throw Error(ErrorCode::InvalidCutSet, "plan visits a child before its parent");
      const Tri2<S>& parentTri = out[ps];
      const VertexId a = f[i], b = f[(i + 1) % 3], c = f[(i + 2) % 3];
      tri[i] = parentTri[mesh.cornerOf(step.parent, a)];
      tri[(i + 1) % 3] = parentTri[mesh.cornerOf(step.parent, b)];
      tri[(i + 2) % 3] = placeThird<S>(tri[i], tri[(i + 1) % 3], mesh.vertex(a), mesh.vertex(b), mesh.vertex(c));
    }
    slot[step.face] = out.size();
    out.push_back(std::move(tri));
  }
  return out;
}

}  // namespace ununfold::detail
