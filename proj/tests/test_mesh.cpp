#include <gtest/gtest.h>

#include <algorithm>

#include "ununfold/constructions.hpp"
#include "ununfold/error.hpp"
#include "ununfold/mesh.hpp"

using namespace ununfold;

namespace {

ErrorCode codeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ununfold::Error";
  return ErrorCode::IoError;
}

std::vector<Point3> squareCorners() { return {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}; }

}  // namespace

TEST(Mesh, TetrahedronIsClosedSphere) {
  const SurfaceMesh t = regularTetrahedron();
  EXPECT_EQ(t.vertexCount(), 4u);
  EXPECT_EQ(t.edgeCount(), 6u);
  EXPECT_EQ(t.faceCount(), 4u);
  EXPECT_TRUE(t.isClosed());
  EXPECT_EQ(t.eulerCharacteristic(), 2);
  EXPECT_EQ(t.boundaryEdgeCount(), 0u);
  for (FaceId f = 0; f < 4; ++f) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(t.cornerAngle(f, c), 60.0, 1e-9);
  }
}

TEST(Mesh, EdgesSortedLexicographicallyAndFaceEdgesMatch) {
  const SurfaceMesh m = acuteHat().mesh;
  for (std::size_t i = 1; i < m.edgeCount(); ++i) {
    const Edge& a = m.edge(static_cast<EdgeId>(i - 1));
    const Edge& b = m.edge(static_cast<EdgeId>(i));
    EXPECT_TRUE(std::tie(a.v0, a.v1) < std::tie(b.v0, b.v1));
  }
  for (FaceId f = 0; f < m.faceCount(); ++f) {
    for (int i = 0; i < 3; ++i) {
      const Edge& e = m.edge(m.faceEdges(f)[i]);
      EXPECT_TRUE(e.hasVertex(m.face(f)[i]));
      EXPECT_TRUE(e.hasVertex(m.face(f)[(i + 1) % 3]));
      EXPECT_TRUE(e.f0 == f || e.f1 == f);
    }
  }
}

TEST(Mesh, SquareDiskHasOneBoundaryLoop) {
  const SurfaceMesh m = buildMesh(squareCorners(), {{0, 1, 2}, {0, 2, 3}});
  EXPECT_EQ(m.kind(), MeshKind::Disk);
  EXPECT_EQ(m.boundaryEdgeCount(), 4u);
  EXPECT_TRUE(m.isBoundaryVertex(0));
  EXPECT_EQ(m.eulerCharacteristic(), 1);
}

TEST(Mesh, ValidationErrors) {
  EXPECT_EQ(codeOf([] { buildMesh(squareCorners(), {{0, 1, 7}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(codeOf([] { buildMesh(squareCorners(), {{0, 1, 1}}); }), ErrorCode::RepeatedVertex);
  EXPECT_EQ(codeOf([] { buildMesh(squareCorners(), {{0, 1, 2}, {0, 3, 2}}); }), ErrorCode::InconsistentOrientation);
  EXPECT_EQ(codeOf([] {
              std::vector<Point3> v = squareCorners();
              v.push_back({0.5, 0.5, 1});
              buildMesh(v, {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}});
            }),
            ErrorCode::NonManifoldEdge);
  EXPECT_EQ(codeOf([] { buildMesh({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {{0, 1, 2}}); }), ErrorCode::DegenerateFace);
  EXPECT_EQ(codeOf([] {
              std::vector<Point3> v = squareCorners();
              v.push_back({5, 5, 0});
              v.push_back({6, 5, 0});
              v.push_back({5, 6, 0});
              buildMesh(v, {{0, 1, 2}, {4, 5, 6}});
            }),
            ErrorCode::BadEulerCharacteristic);
}

TEST(Mesh, NonFiniteCoordinatesRejected) {
  EXPECT_EQ(codeOf([] { buildMesh({{0, 0, 0}, {1, 0, 0}, {0, NAN, 0}}, {{0, 1, 2}}); }), ErrorCode::InvalidParameter);
}

TEST(Mesh, RegionSubcomplexOfCaltropIsAHat) {
  const SurfaceMesh c = caltrop();
  for (int h : c.hatIds()) {
    const SurfaceMesh disk = regionSubcomplex(c, h);
    EXPECT_EQ(disk.faceCount(), 9u);
    EXPECT_EQ(disk.vertexCount(), 7u);
    EXPECT_EQ(disk.kind(), MeshKind::Disk);
    ASSERT_TRUE(disk.parent().has_value());
    const ParentMap& p = *disk.parent();
    for (EdgeId e = 0; e < disk.edgeCount(); ++e) {
      const Edge& local = disk.edge(e);
      const Edge& global = c.edge(p.edge[e]);
      EXPECT_EQ(std::minmax(p.vertex[local.v0], p.vertex[local.v1]), std::minmax(global.v0, global.v1));
    }
  }
}

TEST(Mesh, RegionSubcomplexRejectsClosedSelection) {
  const SurfaceMesh t = regularTetrahedron();
  const std::vector<FaceId> all{0, 1, 2, 3};
  EXPECT_EQ(codeOf([&] { regionSubcomplex(t, all); }), ErrorCode::NotADisk);
  EXPECT_EQ(codeOf([&] { regionSubcomplex(t, 5); }), ErrorCode::NotADisk);
}

TEST(Curvature, GaussBonnetOnClosedFixtures) {
  for (const SurfaceMesh& m : {regularTetrahedron(), caltrop(), subdividedCaltrop(2).mesh, stackedFamily(3).mesh}) {
    EXPECT_NEAR(curvatureReport(m).totalDeficit(), 720.0, 1e-6);
  }
}

TEST(Curvature, GaussBonnetOnHatDisks) {
  // Interior deficits plus boundary turning (180 - angle) sum to 360.
  for (const SurfaceMesh& m : {acuteHat().mesh, stackedHat().mesh, flatHatControl()}) {
    const CurvatureReport r = curvatureReport(m);
    double turning = 0;
    for (const VertexCurvature& v : r.vertices) {
      if (v.boundary) turning += 180.0 - v.angleSum;
    }
    EXPECT_NEAR(r.totalDeficit() + turning, 360.0, 1e-6);
  }
}

TEST(Curvature, CaltropHasTwelveNegativeVertices) {
  const CurvatureReport r = curvatureReport(caltrop());
  EXPECT_EQ(r.countNegative(), 12u);
  EXPECT_EQ(r.countPositive(), 8u);
}

TEST(Curvature, FlatControlHasZeroInteriorCurvature) {
  const CurvatureReport r = curvatureReport(flatHatControl());
  EXPECT_EQ(r.countNegative(), 0u);
  EXPECT_EQ(r.countPositive(), 0u);
}
