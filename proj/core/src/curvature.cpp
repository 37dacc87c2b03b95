#include <algorithm>

#include "ununfold/mesh.hpp"

namespace ununfold {

double CurvatureReport::totalDeficit() const {
  double total = 0;
  for (const auto& v : vertices) {
    if (!v.boundary) total += v.deficit;
  }
  return total;
}

std::size_t CurvatureReport::countNegative(double tol) const {
  return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(), [tol](const VertexCurvature& v) {
    return !v.boundary && v.deficit < -tol;
  }));
}

std::size_t CurvatureReport::countPositive(double tol) const {
  return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(), [tol](const VertexCurvature& v) {
    return !v.boundary && v.deficit > tol;
  }));
}

CurvatureReport curvatureReport(const SurfaceMesh& mesh) {
  CurvatureReport report;
  report.vertices.resize(mesh.vertexCount());
  for (FaceId f = 0; f < mesh.faceCount(); ++f) {
    for (int c = 0; c < 3; ++c) {
      report.vertices[mesh.face(f)[c]].angleSum += mesh.cornerAngle(f, c);
    }
  }
  for (VertexId v = 0; v < mesh.vertexCount(); ++v) {
    auto& entry = report.vertices[v];
    entry.deficit = 360.0 - entry.angleSum;
    entry.boundary = mesh.isBoundaryVertex(v);
  }
  return report;
}

}  // namespace ununfold
