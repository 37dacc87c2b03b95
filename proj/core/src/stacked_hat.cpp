#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "geometry_util.hpp"
#include "ununfold/constructions.hpp"
#include "ununfold/error.hpp"

namespace ununfold {

namespace {

constexpr VertexId B1 = 0, B2 = 1, B3 = 2, V1 = 3, V2 = 4, V3 = 5, V4 = 6;

Face canonical(Face f) {
  while (f[0] > f[1] || f[0] > f[2]) std::rotate(f.begin(), f.begin() + 1, f.end());
  return f;
}

}  // namespace

bool validateCertificate(const SurfaceMesh& mesh, const StackingCertificate& certificate) {
  std::set<Face> surface;
  std::vector<char> used(mesh.vertexCount(), 0);
  for (const Face& f : certificate.root) {
    for (VertexId v : f) {
      if (v >= mesh.vertexCount()) return false;
      used[v] = 1;
    }
    if (!surface.insert(canonical(f)).second) return false;
  }
  for (const Gluing& g : certificate.gluings) {
    if (g.apex >= mesh.vertexCount() || used[g.apex]) return false;
    auto it = surface.find(canonical(g.face));
    if (it == surface.end()) return false;
    const Triangle3 tri{mesh.vertex(g.face[0]), mesh.vertex(g.face[1]), mesh.vertex(g.face[2])};
    if (!(detail::planeClearance(tri, mesh.vertex(g.apex)) > 0)) return false;
    surface.erase(it);
    const auto [a, b, c] = g.face;
    surface.insert(canonical({a, b, g.apex}));
    surface.insert(canonical({b, c, g.apex}));
    surface.insert(canonical({c, a, g.apex}));
    used[g.apex] = 1;
  }
  std::set<Face> target;
  for (const Face& f : mesh.faces()) target.insert(canonical(f));
  return surface == target;
}

StackedHatSpec scaledStackedHatSpec(const Triangle3& boundary) {
  const double unitInradius = 1.0 / (2.0 * std::sqrt(3.0));
  // Thin triangles shrink the interface further: with a full-size interface
  // around the incenter, v2 falls outside the brim face (B3, B1, v1) once the
  // smallest corner drops below about 8 degrees.
  double smallest = 180.0;
  for (int c = 0; c < 3; ++c) {
    const Point3 u = boundary[(c + 1) % 3] - boundary[c], w = boundary[(c + 2) % 3] - boundary[c];
    smallest = std::min(smallest, radToDeg(std::acos(std::clamp(dot(u, w) / (norm(u) * norm(w)), -1.0, 1.0))));
  }
  const double ratio = detail::inradius(boundary) / unitInradius * (smallest > 59.999 ? 1.0 : smallest / 60.0);
  StackedHatSpec spec;
  spec.boundary = boundary;
  spec.interfaceSide *= ratio;
  for (double& h : spec.stackHeights) h *= ratio;
  spec.crownHeight *= ratio;
  return spec;
}

StackedHat stackedHat(const StackedHatSpec& spec) {
  const Triangle3& b = spec.boundary;
  const double iota = spec.interfaceSide;
  if (!(iota > 0)) throw Error(ErrorCode::InvalidParameter, "interface side must be positive");
  if (!(spec.crownHeight > spec.minimumCrownHeight())) {
    throw Error(ErrorCode::CrownTooShort, "crown height " + std::to_string(spec.crownHeight) +
                                              " does not exceed the pentagon bound " +
                                              std::to_string(spec.minimumCrownHeight()));
  }

  const Point3 n = normalized(cross(b[1] - b[0], b[2] - b[0]));
  const Point3 center = detail::incenter(b);
  const Point3 toB1 = normalized(b[0] - center);
  const double circumradius = iota / std::sqrt(3.0);
  auto interfaceVertex = [&](double turnDeg, double height) {
    const double a = degToRad(turnDeg);
    const Point3 dir = std::cos(a) * toB1 + std::sin(a) * cross(n, toB1);
    return center + circumradius * dir + height * n;
  };
  // v3 points at B1; v1, v2 follow counterclockwise.
  const Point3 v1 = interfaceVertex(120.0, spec.stackHeights[0]);
  const Point3 v2 = interfaceVertex(240.0, spec.stackHeights[1]);
  const Point3 v3 = interfaceVertex(0.0, spec.stackHeights[2]);

  const Point3 e1 = v2 - v1, e2 = v3 - v1;
  const Point3 ni = cross(e1, e2);
  const Point3 circum =
      v1 + (1.0 / (2.0 * dot(ni, ni))) * (dot(e2, e2) * cross(ni, e1) + dot(e1, e1) * cross(e2, ni));
  const double leg = std::hypot(spec.crownHeight, iota / 2.0);
  const double r2 = dot(circum - v1, circum - v1);
  if (!(leg * leg > r2)) throw Error(ErrorCode::CrownTooShort, "crown legs shorter than interface circumradius");
  const Point3 v4 = circum + std::sqrt(leg * leg - r2) * normalized(ni);

  std::vector<Point3> vertices{b[0], b[1], b[2], v1, v2, v3, v4};
  std::vector<Face> faces{
      {B1, B2, V1}, {B2, B3, V1}, {B3, B1, V2},  // brim
      {V1, B3, V2}, {B1, V1, V3}, {V2, B1, V3},  // band
      {V1, V2, V4}, {V2, V3, V4}, {V3, V1, V4},  // crown
  };
  std::vector<FaceLabel> labels;
  for (auto region : {RegionLabel::Brim, RegionLabel::Band, RegionLabel::Crown}) {
    for (int i = 0; i < 3; ++i) labels.push_back({region, 0});
  }

  StackedHat hat;
  hat.certificate.root = {{B1, B2, B3}};
  const std::array<Gluing, 4> steps{
      Gluing{{B1, B2, B3}, V1}, Gluing{{B3, B1, V1}, V2}, Gluing{{B1, V1, V2}, V3}, Gluing{{V1, V2, V3}, V4}};
  for (Gluing g : steps) {
    const Triangle3 tri{vertices[g.face[0]], vertices[g.face[1]], vertices[g.face[2]]};
    g.clearance = detail::planeClearance(tri, vertices[g.apex]);
    if (!(g.clearance > 0) || !detail::projectsInside(tri, vertices[g.apex])) {
      throw Error(ErrorCode::InvalidStacking, "apex " + std::to_string(g.apex) + " is not strictly outside its face");
    }
    hat.certificate.gluings.push_back(g);
  }

  hat.mesh = buildMesh(std::move(vertices), std::move(faces), std::move(labels));

  for (FaceId f = 6; f < 9; ++f) {
    if (!(hat.mesh.cornerAngle(f, 2) < 36.0)) {
      throw Error(ErrorCode::CrownTooShort, "crown apex angle not below 36 degrees");
    }
  }
  const CurvatureReport curvature = curvatureReport(hat.mesh);
  for (VertexId v : {V1, V2, V3}) {
    if (!(curvature.vertices[v].deficit < -kAngleToleranceDeg)) {
      throw Error(ErrorCode::CurvatureSignViolation, "vertex " + std::to_string(v) + " is not negatively curved");
    }
  }
  if (!(curvature.vertices[V4].deficit > kAngleToleranceDeg)) {
    throw Error(ErrorCode::CurvatureSignViolation, "crown apex is not positively curved");
  }
  return hat;
}

}  // namespace ununfold
