#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ununfold/geometry.hpp"

namespace ununfold {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr FaceId kNoFace = std::numeric_limits<FaceId>::max();

/// Oriented triangle, counterclockwise when viewed from outside.
using Face = std::array<VertexId, 3>;

enum class RegionLabel { Brim, Band, Crown, Base, Other };

std::string_view toString(RegionLabel label) noexcept;
std::optional<RegionLabel> parseRegionLabel(std::string_view text) noexcept;

struct FaceLabel {
  RegionLabel region = RegionLabel::Other;
  int hatId = -1;  // -1: not part of a hat

  friend bool operator==(const FaceLabel&, const FaceLabel&) = default;
};

/// Which very-ununfoldable family a generated mesh belongs to, if any.
enum class FamilyVariant { AcuteSubdivided, StackedFamily };

struct FamilyTag {
  FamilyVariant variant;
  int k;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string_view toString(FamilyVariant variant) noexcept;

/// Unordered vertex pair with v0 < v1 and its one or two incident faces.
struct Edge {
  VertexId v0;
  VertexId v1;
  FaceId f0;
  FaceId f1 = kNoFace;

  bool isBoundary() const noexcept { return f1 == kNoFace; }
  FaceId other(FaceId f) const noexcept { return f == f0 ? f1 : f0; }
  bool hasVertex(VertexId v) const noexcept { return v == v0 || v == v1; }
};

enum class MeshKind { ClosedSphere, Disk };

/// Maps ids of an extracted sub-disk back to the mesh it was cut from.
struct ParentMap {
  std::vector<VertexId> vertex;
  std::vector<FaceId> face;
  std::vector<EdgeId> edge;
};

/// Immutable, validated triangle surface (a topological sphere or disk).
///
/// Edge ids follow the lexicographic order of (min vertex, max vertex), so
/// iteration over edges is reproducible. Face edge i joins face[i] and
/// face[(i + 1) % 3].
class SurfaceMesh {
 public:
  SurfaceMesh() = default;

  std::span<const Point3> vertices() const noexcept { return vertices_; }
  std::span<const Face> faces() const noexcept { return faces_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const FaceLabel> labels() const noexcept { return labels_; }

  std::size_t vertexCount() const noexcept { return vertices_.size(); }
  std::size_t faceCount() const noexcept { return faces_.size(); }
  std::size_t edgeCount() const noexcept { return edges_.size(); }

  const Point3& vertex(VertexId v) const { return vertices_.at(v); }
  const Face& face(FaceId f) const { return faces_.at(f); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const FaceLabel& label(FaceId f) const { return labels_.at(f); }
  const std::array<EdgeId, 3>& faceEdges(FaceId f) const { return faceEdges_.at(f); }

  std::optional<EdgeId> findEdge(VertexId a, VertexId b) const noexcept;
  bool isBoundaryVertex(VertexId v) const { return boundaryVertex_.at(v) != 0; }
  std::span<const FaceId> facesAround(VertexId v) const { return vertexFaces_.at(v); }

  MeshKind kind() const noexcept { return kind_; }
  bool isClosed() const noexcept { return kind_ == MeshKind::ClosedSphere; }
  std::size_t boundaryEdgeCount() const noexcept;
  int eulerCharacteristic() const noexcept {
    return static_cast<int>(vertexCount()) - static_cast<int>(edgeCount()) + static_cast<int>(faceCount());
  }

  /// Position of `v` within face `f` (0..2); throws if absent.
  int cornerOf(FaceId f, VertexId v) const;
  double faceArea(FaceId f) const;
  /// Interior angle of face `f` at its corner `corner`, in degrees.
  double cornerAngle(FaceId f, int corner) const;

  std::optional<FamilyTag> family() const noexcept { return family_; }
  void setFamily(std::optional<FamilyTag> tag) noexcept { family_ = tag; }

  const std::optional<ParentMap>& parent() const noexcept { return parent_; }

  std::vector<int> hatIds() const;

 private:
  friend SurfaceMesh buildMesh(std::vector<Point3>, std::vector<Face>, std::vector<FaceLabel>);
  friend SurfaceMesh regionSubcomplex(const SurfaceMesh&, std::span<const FaceId>);

  std::vector<Point3> vertices_;
  std::vector<Face> faces_;
  std::vector<FaceLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> faceEdges_;
  std::vector<std::vector<FaceId>> vertexFaces_;
  std::vector<char> boundaryVertex_;
  MeshKind kind_ = MeshKind::ClosedSphere;
  std::optional<FamilyTag> family_;
  std::optional<ParentMap> parent_;
};

/// Faces with area below this are rejected as degenerate (model units^2).
inline constexpr double kDegenerateAreaThreshold = 1e-10;

/// Validates and indexes a triangle surface. Throws ununfold::Error with one of
/// IndexOutOfRange, RepeatedVertex, NonManifoldEdge, InconsistentOrientation,
/// DegenerateFace, BadEulerCharacteristic.
SurfaceMesh buildMesh(std::vector<Point3> vertices, std::vector<Face> faces,
                      std::vector<FaceLabel> labels = {});

/// Extracts the faces carrying `hatId` as a standalone disk with a ParentMap.
/// Throws NotADisk if they do not form a topological disk.
SurfaceMesh regionSubcomplex(const SurfaceMesh& mesh, int hatId);
SurfaceMesh regionSubcomplex(const SurfaceMesh& mesh, std::span<const FaceId> faces);

// ---------------------------------------------------------------------------
// Discrete curvature

inline constexpr double kAngleToleranceDeg = 1e-6;

struct VertexCurvature {
  double angleSum = 0;  // degrees
  double deficit = 0;   // 360 - angleSum
  bool boundary = false;
};

struct CurvatureReport {
  std::vector<VertexCurvature> vertices;

  /// Sum of deficits over interior vertices (720 for a closed sphere).
  double totalDeficit() const;
  std::size_t countNegative(double tol = kAngleToleranceDeg) const;
  std::size_t countPositive(double tol = kAngleToleranceDeg) const;
};

CurvatureReport curvatureReport(const SurfaceMesh& mesh);

}  // namespace ununfold
