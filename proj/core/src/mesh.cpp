#include "ununfold/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ununfold/error.hpp"
#include "union_find.hpp"

namespace ununfold {

std::string_view toString(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::BadEulerCharacteristic: return "BadEulerCharacteristic";
    case ErrorCode::NotADisk: return "NotADisk";
    case ErrorCode::EmbeddingSolveFailure: return "EmbeddingSolveFailure";
    case ErrorCode::EmbeddingInvalid: return "EmbeddingInvalid";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InvalidStacking: return "InvalidStacking";
    case ErrorCode::CurvatureSignViolation: return "CurvatureSignViolation";
    case ErrorCode::CrownTooShort: return "CrownTooShort";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidCutSet: return "InvalidCutSet";
    case ErrorCode::NonDevelopablePiece: return "NonDevelopablePiece";
    case ErrorCode::CurvatureSignatureMismatch: return "CurvatureSignatureMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EnumerationMismatch: return "EnumerationMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view toString(RegionLabel label) noexcept {
  switch (label) {
    case RegionLabel::Brim: return "brim";
    case RegionLabel::Band: return "band";
    case RegionLabel::Crown: return "crown";
    case RegionLabel::Base: return "base";
    case RegionLabel::Other: return "other";
  }
  return "other";
}

std::optional<RegionLabel> parseRegionLabel(std::string_view text) noexcept {
  for (auto l : {RegionLabel::Brim, RegionLabel::Band, RegionLabel::Crown, RegionLabel::Base, RegionLabel::Other}) {
    if (toString(l) == text) return l;
  }
  return std::nullopt;
}

std::string_view toString(FamilyVariant variant) noexcept {
  return variant == FamilyVariant::AcuteSubdivided ? "subdivided" : "stacked";
}

// ---------------------------------------------------------------------------

std::optional<EdgeId> SurfaceMesh::findEdge(VertexId a, VertexId b) const noexcept {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return std::pair{e.v0, e.v1} < key;
                             });
  if (it == edges_.end() || it->v0 != a || it->v1 != b) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::size_t SurfaceMesh::boundaryEdgeCount() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.isBoundary(); }));
}

int SurfaceMesh::cornerOf(FaceId f, VertexId v) const {
  const Face& face = faces_.at(f);
  for (int i = 0; i < 3; ++i) {
    if (face[i] == v) return i;
  }
  throw Error(ErrorCode::IndexOutOfRange,
              "vertex " + std::to_string(v) + " is not a corner of face " + std::to_string(f));
}

double SurfaceMesh::faceArea(FaceId f) const {
  const Face& t = faces_.at(f);
  return 0.5 * norm(cross(vertices_[t[1]] - vertices_[t[0]], vertices_[t[2]] - vertices_[t[0]]));
}

double SurfaceMesh::cornerAngle(FaceId f, int corner) const {
  const Face& t = faces_.at(f);
  return angleAt(vertices_[t[corner]], vertices_[t[(corner + 1) % 3]], vertices_[t[(corner + 2) % 3]]);
}

std::vector<int> SurfaceMesh::hatIds() const {
  std::vector<int> ids;
  for (const auto& l : labels_) {
    if (l.hatId >= 0) ids.push_back(l.hatId);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// ---------------------------------------------------------------------------

namespace {

struct HalfEdgeUse {
  FaceId face;
  VertexId from;
};

bool boundaryIsSingleLoop(const std::vector<Edge>& edges, std::size_t vertexCount) {
  std::vector<int> degree(vertexCount, 0);
  detail::UnionFind uf(vertexCount);
  std::size_t boundaryEdges = 0;
  VertexId any = 0;
  for (const Edge& e : edges) {
    if (!e.isBoundary()) continue;
    ++boundaryEdges;
    ++degree[e.v0];
    ++degree[e.v1];
    uf.unite(e.v0, e.v1);
    any = e.v0;
  }
  std::size_t loopVertices = 0;
  for (std::size_t v = 0; v < vertexCount; ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] != 2 || uf.find(v) != uf.find(any)) return false;
    ++loopVertices;
  }
  return loopVertices == boundaryEdges;
}

}  // namespace

SurfaceMesh buildMesh(std::vector<Point3> vertices, std::vector<Face> faces, std::vector<FaceLabel> labels) {
  const std::size_t nv = vertices.size();
  const std::size_t nf = faces.size();
  if (nf == 0) throw Error(ErrorCode::BadEulerCharacteristic, "mesh has no faces");
  if (labels.empty()) labels.resize(nf);
  if (labels.size() != nf) {
    throw Error(ErrorCode::IndexOutOfRange, "label count does not match face count");
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!isFinite(vertices[v])) {
      throw Error(ErrorCode::InvalidParameter, "vertex " + std::to_string(v) + " has non-finite coordinates");
    }
  }

  std::map<std::pair<VertexId, VertexId>, std::vector<HalfEdgeUse>> uses;
  for (FaceId f = 0; f < nf; ++f) {
    const Face& t = faces[f];
    for (VertexId v : t) {
      if (v >= nv) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "face " + std::to_string(f) + " references vertex " + std::to_string(v));
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::RepeatedVertex, "face " + std::to_string(f) + " repeats a vertex");
    }
    for (int i = 0; i < 3; ++i) {
      const VertexId a = t[i], b = t[(i + 1) % 3];
      uses[{std::min(a, b), std::max(a, b)}].push_back({f, a});
    }
  }

  SurfaceMesh mesh;
  mesh.edges_.reserve(uses.size());
  for (const auto& [key, list] : uses) {
    if (list.size() > 2) {
      throw Error(ErrorCode::NonManifoldEdge, "edge (" + std::to_string(key.first) + "," +
                                                  std::to_string(key.second) + ") has " +
                                                  std::to_string(list.size()) + " faces");
    }
    Edge e{key.first, key.second, list[0].face};
    if (list.size() == 2) {
      if (list[0].from == list[1].from) {
        throw Error(ErrorCode::InconsistentOrientation,
                    "faces " + std::to_string(list[0].face) + " and " + std::to_string(list[1].face) +
                        " traverse their shared edge in the same direction");
      }
      e.f0 = std::min(list[0].face, list[1].face);
      e.f1 = std::max(list[0].face, list[1].face);
    }
    mesh.edges_.push_back(e);
  }

  mesh.vertices_ = std::move(vertices);
  mesh.faces_ = std::move(faces);
  mesh.labels_ = std::move(labels);

  mesh.faceEdges_.resize(nf);
  mesh.vertexFaces_.assign(nv, {});
  for (FaceId f = 0; f < nf; ++f) {
    const Face& t = mesh.faces_[f];
    for (int i = 0; i < 3; ++i) {
      mesh.faceEdges_[f][i] = *mesh.findEdge(t[i], t[(i + 1) % 3]);
      mesh.vertexFaces_[t[i]].push_back(f);
    }
    if (mesh.faceArea(f) < kDegenerateAreaThreshold) {
      throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " has area below threshold");
    }
  }

  mesh.boundaryVertex_.assign(nv, 0);
  for (const Edge& e : mesh.edges_) {
    if (e.isBoundary()) mesh.boundaryVertex_[e.v0] = mesh.boundaryVertex_[e.v1] = 1;
  }

  detail::UnionFind faceComponents(nf);
  for (const Edge& e : mesh.edges_) {
    if (!e.isBoundary()) faceComponents.unite(e.f0, e.f1);
  }
  if (faceComponents.components() != 1) {
    throw Error(ErrorCode::BadEulerCharacteristic, "mesh is not connected");
  }

  const int chi = mesh.eulerCharacteristic();
  const std::size_t boundaryEdges = mesh.boundaryEdgeCount();
  if (boundaryEdges == 0) {
    if (chi != 2 || 2 * mesh.edgeCount() != 3 * nf) {
      throw Error(ErrorCode::BadEulerCharacteristic,
                  "closed mesh has V-E+F = " + std::to_string(chi) + ", expected 2");
    }
    mesh.kind_ = MeshKind::ClosedSphere;
  } else {
    if (chi != 1 || !boundaryIsSingleLoop(mesh.edges_, nv)) {
      throw Error(ErrorCode::BadEulerCharacteristic,
                  "bordered mesh has V-E+F = " + std::to_string(chi) + " or a non-simple boundary");
    }
    mesh.kind_ = MeshKind::Disk;
  }
  return mesh;
}

SurfaceMesh regionSubcomplex(const SurfaceMesh& mesh, std::span<const FaceId> selected) {
  std::vector<FaceId> faces(selected.begin(), selected.end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty()) throw Error(ErrorCode::NotADisk, "no faces selected");

  std::vector<VertexId> parentVertices;
  for (FaceId f : faces) {
    for (VertexId v : mesh.face(f)) parentVertices.push_back(v);
  }
  std::sort(parentVertices.begin(), parentVertices.end());
  parentVertices.erase(std::unique(parentVertices.begin(), parentVertices.end()), parentVertices.end());

  auto local = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(parentVertices.begin(), parentVertices.end(), v) -
                                 parentVertices.begin());
  };

  std::vector<Point3> vertices;
  vertices.reserve(parentVertices.size());
  for (VertexId v : parentVertices) vertices.push_back(mesh.vertex(v));
  std::vector<Face> localFaces;
  std::vector<FaceLabel> labels;
  for (FaceId f : faces) {
    const Face& t = mesh.face(f);
    localFaces.push_back({local(t[0]), local(t[1]), local(t[2])});
    labels.push_back(mesh.label(f));
  }

  SurfaceMesh disk;
  try {
    disk = buildMesh(std::move(vertices), std::move(localFaces), std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotADisk, std::string("selected faces do not form a disk (") + e.what() + ")");
  }
  if (disk.kind() != MeshKind::Disk) throw Error(ErrorCode::NotADisk, "selected faces form a closed surface");

  ParentMap map;
  map.vertex = std::move(parentVertices);
  map.face = std::move(faces);
  for (const Edge& e : disk.edges()) {
    map.edge.push_back(*mesh.findEdge(map.vertex[e.v0], map.vertex[e.v1]));
  }
  disk.parent_ = std::move(map);
  return disk;
}

SurfaceMesh regionSubcomplex(const SurfaceMesh& mesh, int hatId) {
  std::vector<FaceId> faces;
  for (FaceId f = 0; f < mesh.faceCount(); ++f) {
    if (mesh.label(f).hatId == hatId) faces.push_back(f);
  }
  if (faces.empty()) throw Error(ErrorCode::NotADisk, "no faces carry hat id " + std::to_string(hatId));
  return regionSubcomplex(mesh, std::span<const FaceId>(faces));
}

}  // namespace ununfold
