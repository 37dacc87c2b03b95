#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "geometry_util.hpp"
#include "ununfold/constructions.hpp"
#include "ununfold/error.hpp"

namespace ununfold {

namespace {

struct Tetrahedron {
  std::vector<Point3> vertices;
  std::vector<Face> faces;
};

Tetrahedron unitTetrahedron() {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  Tetrahedron t;
  t.vertices = {Point3{s, s, s}, Point3{s, -s, -s}, Point3{-s, s, -s}, Point3{-s, -s, s}};
  t.faces = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  for (Face& f : t.faces) {
    const Triangle3 tri{t.vertices[f[0]], t.vertices[f[1]], t.vertices[f[2]]};
    const Point3 centroid = (1.0 / 3.0) * (tri[0] + tri[1] + tri[2]);
    if (dot(cross(tri[1] - tri[0], tri[2] - tri[0]), centroid) < 0) std::swap(f[1], f[2]);
  }
  return t;
}

/// Rigid map of a hat's local frame (standardBaseTriangle) onto `target`.
Point3 toFaceFrame(const Triangle3& target, Point3 local) {
  const Point3 centroid = (1.0 / 3.0) * (target[0] + target[1] + target[2]);
  const Point3 e1 = normalized(target[1] - target[0]);
  const Point3 n = detail::unitNormal(target);
  const Point3 e2 = cross(n, e1);
  return centroid + local.x * e1 + local.y * e2 + local.z * n;
}

/// Every edge convex: the far vertex of each neighbour lies strictly below a face's plane.
bool isStrictlyConvex(const std::vector<Point3>& vertices, const std::vector<Face>& faces) {
  for (const Face& f : faces) {
    const Triangle3 tri{vertices[f[0]], vertices[f[1]], vertices[f[2]]};
    for (VertexId v = 0; v < vertices.size(); ++v) {
      if (v == f[0] || v == f[1] || v == f[2]) continue;
      if (!(detail::planeClearance(tri, vertices[v]) < 0)) return false;
    }
  }
  return true;
}

Triangle3 triangleOf(const std::vector<Point3>& vertices, const Face& f) {
  return {vertices[f[0]], vertices[f[1]], vertices[f[2]]};
}

}  // namespace

SurfaceMesh regularTetrahedron() {
  Tetrahedron t = unitTetrahedron();
  return buildMesh(std::move(t.vertices), std::move(t.faces));
}

FamilyMesh subdividedCaltrop(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "subdivision order k must be >= 1");
  const Tetrahedron tet = unitTetrahedron();

  // Grid vertices are keyed by their integer barycentric weights over the
  // tetrahedron's corners, which identifies points shared between faces.
  std::map<std::array<int, 4>, VertexId> ids;
  std::vector<Point3> vertices;
  std::vector<Face> baseFaces;
  for (const Face& tf : tet.faces) {
    auto gridVertex = [&](int i, int j) {
      std::array<int, 4> key{};
      key[tf[0]] = k - i - j;
      key[tf[1]] = i;
      key[tf[2]] = j;
      auto [it, inserted] = ids.try_emplace(key, static_cast<VertexId>(vertices.size()));
      if (inserted) {
        Point3 p{};
        for (int c = 0; c < 4; ++c) p = p + (static_cast<double>(key[c]) / k) * tet.vertices[c];
        vertices.push_back(p);
      }
      return it->second;
    };
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i + j < k; ++i) {
        baseFaces.push_back({gridVertex(i, j), gridVertex(i + 1, j), gridVertex(i, j + 1)});
        if (i + j <= k - 2) {
          baseFaces.push_back({gridVertex(i + 1, j), gridVertex(i + 1, j + 1), gridVertex(i, j + 1)});
        }
      }
    }
  }

  FamilyMesh out;
  out.baseFaceCount = baseFaces.size();
  out.baseVertexCount = vertices.size();

  AcuteHatSpec spec;
  spec.boundarySide = 1.0 / k;
  const AcuteHat local = acuteHat(spec);
  const auto& localFaces = local.mesh.faces();

  std::vector<Face> faces;
  std::vector<FaceLabel> labels;
  faces.reserve(9 * baseFaces.size());
  for (std::size_t h = 0; h < baseFaces.size(); ++h) {
    const Face& bf = baseFaces[h];
    const Triangle3 tri = triangleOf(vertices, bf);
    out.baseTriangles.push_back(tri);
    std::array<VertexId, 7> map{bf[0], bf[1], bf[2], 0, 0, 0, 0};
    for (VertexId lv = 3; lv < 7; ++lv) {
      map[lv] = static_cast<VertexId>(vertices.size());
      vertices.push_back(toFaceFrame(tri, local.mesh.vertex(lv)));
    }
    for (FaceId lf = 0; lf < localFaces.size(); ++lf) {
      const Face& f = localFaces[lf];
      faces.push_back({map[f[0]], map[f[1]], map[f[2]]});
      labels.push_back({local.mesh.label(lf).region, static_cast<int>(h)});
    }
  }

  out.mesh = buildMesh(std::move(vertices), std::move(faces), std::move(labels));
  out.mesh.setFamily(FamilyTag{FamilyVariant::AcuteSubdivided, k});
  return out;
}

SurfaceMesh caltrop() { return subdividedCaltrop(1).mesh; }

FamilyMesh stackedFamily(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidParameter, "stacking count k must be >= 0");
  const Tetrahedron tet = unitTetrahedron();
  std::vector<Point3> vertices = tet.vertices;
  std::vector<Face> baseFaces = tet.faces;

  StackingCertificate certificate;
  certificate.root = tet.faces;

  double shallowness = 0.02;
  for (int step = 0; step < k; ++step, shallowness *= 0.5) {
    const Face f = baseFaces.front();
    const Triangle3 tri = triangleOf(vertices, f);
    const Point3 apex = detail::incenter(tri) + (shallowness * detail::inradius(tri)) * detail::unitNormal(tri);
    const auto p = static_cast<VertexId>(vertices.size());
    vertices.push_back(apex);
    certificate.gluings.push_back({f, p, detail::planeClearance(tri, apex)});
    baseFaces.front() = {f[0], f[1], p};
    baseFaces.push_back({f[1], f[2], p});
    baseFaces.push_back({f[2], f[0], p});
  }
  if (!isStrictlyConvex(vertices, baseFaces)) {
    throw Error(ErrorCode::InvalidStacking, "refined base is not strictly convex");
  }

  FamilyMesh out;
  out.baseFaceCount = baseFaces.size();
  out.baseVertexCount = vertices.size();

  std::vector<Face> faces;
  std::vector<FaceLabel> labels;
  for (std::size_t h = 0; h < baseFaces.size(); ++h) {
    // Put the widest corner first: the interface triangle points at it.
    Face bf = baseFaces[h];
    Triangle3 tri = triangleOf(vertices, bf);
    int widest = 0;
    double best = -1;
    for (int c = 0; c < 3; ++c) {
      const double a = angleAt(tri[c], tri[(c + 1) % 3], tri[(c + 2) % 3]);
      if (a > best + 1e-9) {
        best = a;
        widest = c;
      }
    }
    std::rotate(bf.begin(), bf.begin() + widest, bf.end());
    tri = triangleOf(vertices, bf);
    out.baseTriangles.push_back(tri);

    const StackedHat hat = stackedHat(scaledStackedHatSpec(tri));
    std::array<VertexId, 7> map{bf[0], bf[1], bf[2], 0, 0, 0, 0};
    for (VertexId lv = 3; lv < 7; ++lv) {
      map[lv] = static_cast<VertexId>(vertices.size());
      vertices.push_back(hat.mesh.vertex(lv));
    }
    for (FaceId lf = 0; lf < hat.mesh.faceCount(); ++lf) {
      const Face& lfv = hat.mesh.face(lf);
      faces.push_back({map[lfv[0]], map[lfv[1]], map[lfv[2]]});
      labels.push_back({hat.mesh.label(lf).region, static_cast<int>(h)});
    }
    for (const Gluing& g : hat.certificate.gluings) {
      certificate.gluings.push_back({{map[g.face[0]], map[g.face[1]], map[g.face[2]]}, map[g.apex], g.clearance});
    }
  }

  out.mesh = buildMesh(std::move(vertices), std::move(faces), std::move(labels));
  out.mesh.setFamily(FamilyTag{FamilyVariant::StackedFamily, k});
  if (!validateCertificate(out.mesh, certificate)) {
    throw Error(ErrorCode::InvalidStacking, "stacking certificate does not replay");
  }
  out.certificate = std::move(certificate);
  return out;
}

}  // namespace ununfold
