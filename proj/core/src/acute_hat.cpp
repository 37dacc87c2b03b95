#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ununfold/constructions.hpp"
#include "ununfold/error.hpp"

namespace ununfold {

namespace {

// Combinatorics shared by the acute hat and its flat control.
//   brim:  (B1,B2,N3) (B2,B3,N1) (B3,B1,N2)
//   band:  (B1,N3,N2) (B2,N1,N3) (B3,N2,N1)
//   crown: (N1,N2,C)  (N2,N3,C)  (N3,N1,C)
constexpr VertexId B1 = 0, B2 = 1, B3 = 2, N1 = 3, N2 = 4, N3 = 5, C = 6;

const std::vector<Face>& hatFaces() {
  static const std::vector<Face> faces = {
      {B1, B2, N3}, {B2, B3, N1}, {B3, B1, N2},  //
      {B1, N3, N2}, {B2, N1, N3}, {B3, N2, N1},  //
      {N1, N2, C},  {N2, N3, C},  {N3, N1, C},
  };
  return faces;
}

std::vector<FaceLabel> hatLabels(int hatId) {
  std::vector<FaceLabel> labels;
  for (auto region : {RegionLabel::Brim, RegionLabel::Band, RegionLabel::Crown}) {
    for (int i = 0; i < 3; ++i) labels.push_back({region, hatId});
  }
  return labels;
}

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

// Gaussian elimination with partial pivoting; false if singular.
bool solve4(Mat4 a, Vec4 b, Vec4& x) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 3; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < 4; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

double maxAbs(const Vec4& v) {
  double m = 0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

// Symmetric embedding: ring vertex N1 at cylindrical (radius, phase, height),
// N2/N3 by 120-degree rotations, C on the axis. Unknowns (radius, phase,
// ringHeight, centerHeight); N1 must be at leg distance from both B2 and B3,
// adjacent ring vertices at the inner edge length, and C at leg distance.
struct HatSystem {
  Point3 b2, b3;
  double leg, inner;

  Vec4 residual(const Vec4& x) const {
    const double rho = x[0], phi = x[1], h = x[2], hc = x[3];
    const Point3 n1{rho * std::cos(phi), rho * std::sin(phi), h};
    const double leg2 = leg * leg;
    return {dot(n1 - b2, n1 - b2) - leg2, dot(n1 - b3, n1 - b3) - leg2, 3.0 * rho * rho - inner * inner,
            rho * rho + (hc - h) * (hc - h) - leg2};
  }

  Mat4 jacobian(const Vec4& x) const {
    const double rho = x[0], phi = x[1], h = x[2], hc = x[3];
    const double c = std::cos(phi), s = std::sin(phi);
    auto ringRow = [&](Point3 b) -> Vec4 {
      const double dx = rho * c - b.x, dy = rho * s - b.y;
      return {2 * dx * c + 2 * dy * s, 2 * dx * (-rho * s) + 2 * dy * (rho * c), 2 * h, 0.0};
    };
    return {ringRow(b2), ringRow(b3), Vec4{6 * rho, 0, 0, 0},
            Vec4{2 * rho, 0, -2 * (hc - h), 2 * (hc - h)}};
  }
};

constexpr double kResidualTarget = 1e-12;

}  // namespace

Triangle3 standardBaseTriangle(double side) {
  const double r3 = std::sqrt(3.0);
  return {Point3{-side / 2, -side / (2 * r3), 0}, Point3{side / 2, -side / (2 * r3), 0}, Point3{0, side / r3, 0}};
}

AcuteHat acuteHat(const AcuteHatSpec& spec) {
  const double s = spec.boundarySide;
  if (!(s > 0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidParameter, "boundary side must be positive");
  if (std::abs(spec.brimApexDeg + 2 * spec.brimBaseDeg - 180.0) > 1e-12 ||
      std::abs(2 * spec.bandBaseDeg + spec.bandApexDeg - 180.0) > 1e-12) {
    throw Error(ErrorCode::InvalidParameter, "hat triangle angles must sum to 180 degrees");
  }
  const Triangle3 base = standardBaseTriangle(s);
  HatSystem system{base[1], base[2], spec.legLength(), spec.innerEdgeLength()};

  // Flattened top view: ring halfway to the incircle, N1 facing the midpoint
  // of B2B3, low heights.
  Vec4 x{s / (4 * std::sqrt(3.0)), degToRad(30.0), 0.1 * s, 0.2 * s};
  Vec4 r = system.residual(x);
  const double tol = kResidualTarget * s * s;
  int iter = 0;
  for (; iter < 100 && maxAbs(r) > tol * 1e-3; ++iter) {
    Vec4 step{};
    Vec4 rhs{-r[0], -r[1], -r[2], -r[3]};
    if (!solve4(system.jacobian(x), rhs, step)) break;
    double damping = 1.0;
    for (int halvings = 0; halvings < 40; ++halvings, damping *= 0.5) {
      Vec4 trial;
      for (int i = 0; i < 4; ++i) trial[i] = x[i] + damping * step[i];
      const Vec4 rt = system.residual(trial);
      if (maxAbs(rt) < maxAbs(r) || halvings == 39) {
        x = trial;
        r = rt;
        break;
      }
    }
  }
  if (!(maxAbs(r) <= tol)) {
    throw Error(ErrorCode::EmbeddingSolveFailure,
                "residual " + std::to_string(maxAbs(r)) + " after " + std::to_string(iter) + " iterations");
  }

  const double rho = x[0], phi = x[1], h = x[2], hc = x[3];
  auto ring = [&](int i) {
    const double a = phi + degToRad(120.0 * i);
    return Point3{rho * std::cos(a), rho * std::sin(a), h};
  };
  std::vector<Point3> vertices{base[0], base[1], base[2], ring(0), ring(1), ring(2), Point3{0, 0, hc}};

  // Ring heights must be positive and every face must project with positive
  // orientation onto the base plane, so the hat is a terrain over its base.
  if (!(h > 0) || !(hc > h)) throw Error(ErrorCode::EmbeddingInvalid, "interior vertex at or below base plane");
  for (const Face& f : hatFaces()) {
    const Point3 a = vertices[f[0]], b = vertices[f[1]], c = vertices[f[2]];
    if ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) <= 0) {
      throw Error(ErrorCode::EmbeddingInvalid, "face flipped in top view");
    }
  }

  AcuteHat hat;
  hat.mesh = buildMesh(std::move(vertices), hatFaces(), hatLabels(0));

  auto& d = hat.diagnostics;
  d.radius = rho;
  d.phaseDeg = radToDeg(phi);
  d.ringHeight = h;
  d.centerHeight = hc;
  d.iterations = iter;
  d.residual = maxAbs(r);
  const double leg = spec.legLength(), inner = spec.innerEdgeLength();
  for (const Edge& e : hat.mesh.edges()) {
    const bool boundary = e.isBoundary();
    const bool innerEdge = e.v0 >= N1 && e.v1 <= N3;
    const double expected = boundary ? s : (innerEdge ? inner : leg);
    const double actual = distance(hat.mesh.vertex(e.v0), hat.mesh.vertex(e.v1));
    d.maxEdgeRelativeError = std::max(d.maxEdgeRelativeError, std::abs(actual - expected) / expected);
  }
  const std::array<std::array<double, 3>, 3> expectedAngles{{
      {spec.brimBaseDeg, spec.brimBaseDeg, spec.brimApexDeg},  // brim (B, B, N)
      {spec.bandApexDeg, spec.bandBaseDeg, spec.bandBaseDeg},  // band (B, N, N)
      {spec.bandBaseDeg, spec.bandBaseDeg, spec.bandApexDeg},  // crown (N, N, C)
  }};
  for (FaceId f = 0; f < 9; ++f) {
    for (int c = 0; c < 3; ++c) {
      const double err = std::abs(hat.mesh.cornerAngle(f, c) - expectedAngles[f / 3][c]);
      d.maxAngleErrorDeg = std::max(d.maxAngleErrorDeg, err);
    }
  }
  return hat;
}

SurfaceMesh flatHatControl(double boundarySide) {
  AcuteHatSpec spec;
  spec.boundarySide = boundarySide;
  const AcuteHat hat = acuteHat(spec);
  std::vector<Point3> vertices(hat.mesh.vertices().begin(), hat.mesh.vertices().end());
  for (auto& v : vertices) v.z = 0;
  auto labels = hatLabels(0);
  return buildMesh(std::move(vertices), hatFaces(), std::move(labels));
}

bool prismContainmentCheck(const SurfaceMesh& hat, const Triangle3& base) {
  std::size_t boundaryVertices = 0;
  for (VertexId v = 0; v < hat.vertexCount(); ++v) boundaryVertices += hat.isBoundaryVertex(v) ? 1 : 0;
  if (hat.kind() != MeshKind::Disk || boundaryVertices != 3) {
    throw Error(ErrorCode::BoundaryMismatch, "hat must be a disk bounded by a triangle");
  }

  const Point3 n = normalized(cross(base[1] - base[0], base[2] - base[0]));
  constexpr double tol = 1e-9;
  for (const Point3& p : hat.vertices()) {
    if (dot(p - base[0], n) < -tol) return false;
    // Projection inside the base: on the inner side of all three edge planes.
    for (int i = 0; i < 3; ++i) {
      const Point3 a = base[i], b = base[(i + 1) % 3];
      const Point3 inward = normalized(cross(n, b - a));
      if (dot(p - a, inward) < -tol) return false;
    }
  }
  return true;
}

}  // namespace ununfold
