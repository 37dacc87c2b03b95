#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ununfold/mesh.hpp"

namespace ununfold {

/// A set of cut edges over one particular mesh. Boundary edges carry no dual
/// arc, so on a disk analysed in isolation they behave as cut.
class CutSet {
 public:
  CutSet() = default;
  explicit CutSet(const SurfaceMesh& mesh) : cut_(mesh.edgeCount(), 0) {}
  /// Throws InvalidCutSet for ids outside the mesh's edge table.
  CutSet(const SurfaceMesh& mesh, std::span<const EdgeId> edges);

  /// Edges given by their endpoints; throws InvalidCutSet if a pair is not an edge.
  static CutSet fromVertexPairs(const SurfaceMesh& mesh, std::span<const std::pair<VertexId, VertexId>> pairs);

  bool isCut(EdgeId e) const { return cut_.at(e) != 0; }
  void cut(EdgeId e) { cut_.at(e) = 1; }
  void uncut(EdgeId e) { cut_.at(e) = 0; }

  std::vector<EdgeId> edges() const;
  std::size_t size() const;
  std::size_t universeSize() const noexcept { return cut_.size(); }

  friend bool operator==(const CutSet&, const CutSet&) = default;

 private:
  std::vector<char> cut_;
};

struct DualArc {
  EdgeId edge;
  FaceId a;
  FaceId b;
};

/// Faces as nodes; one arc per interior edge that is not cut.
struct DualGraph {
  std::size_t nodeCount = 0;
  std::vector<DualArc> arcs;
};

DualGraph dualGraph(const SurfaceMesh& mesh, const CutSet& cuts);

/// Connected components of faces under uncut-edge adjacency, each sorted,
/// ordered by smallest face id.
std::vector<std::vector<FaceId>> piecesOf(const SurfaceMesh& mesh, const CutSet& cuts);

// ---------------------------------------------------------------------------
// Development

/// One face of a development: `parent` is kNoFace for the root.
struct DevelopStep {
  FaceId face;
  FaceId parent;
  EdgeId edge;
};

/// A piece laid flat. `triangles[i]` is the planar image of `plan[i].face`,
/// with corners in the face's vertex order.
struct DevelopedPiece {
  std::vector<FaceId> faces;  // sorted
  std::vector<DevelopStep> plan;
  std::vector<Triangle2> triangles;

  std::size_t indexOf(FaceId f) const;
  const Triangle2& triangleOf(FaceId f) const { return triangles[indexOf(f)]; }
  bool isTreeEdge(EdgeId e) const;
};

struct Unfolding {
  std::vector<DevelopedPiece> pieces;
};

/// Coincidence tolerance for uncut edges closing a cycle of the dual graph.
inline constexpr double kDevelopTolerance = 1e-9;

/// Develops one piece: root at its smallest face id with that face's smallest
/// edge along +x from the origin, then breadth-first across uncut edges.
/// Throws NonDevelopablePiece if an uncut edge outside the BFS tree fails to
/// coincide, i.e. the piece cannot lie flat.
DevelopedPiece developPiece(const SurfaceMesh& mesh, const CutSet& cuts, std::span<const FaceId> faces);

/// Develops every piece of the cut surface.
Unfolding develop(const SurfaceMesh& mesh, const CutSet& cuts);

/// Develops `faces` along an explicit dual spanning tree given by its edges.
DevelopedPiece developTree(const SurfaceMesh& mesh, std::span<const FaceId> faces, std::span<const EdgeId> treeEdges);

// ---------------------------------------------------------------------------
// Cut classification inside a disk

enum class CutClass { SeparatingCycle, BoundaryToBoundaryPath, ForestOnePerTree };

std::string_view toString(CutClass c) noexcept;

struct CutClassification {
  CutClass kind = CutClass::ForestOnePerTree;
  std::vector<EdgeId> cycle;                // SeparatingCycle witness
  std::vector<VertexId> path;               // BoundaryToBoundaryPath witness
  std::vector<std::vector<EdgeId>> trees;   // ForestOnePerTree witness
};

/// Classifies the cut edges interior to `disk`: they contain a cycle, or a
/// tree joining two boundary vertices, or form a forest with at most one
/// boundary vertex per tree. Boundary edges are ignored.
CutClassification classifyCutsInDisk(const SurfaceMesh& disk, const CutSet& cuts);

/// The interior vertices of a hat-like disk by curvature sign.
struct HatSignature {
  VertexId center;
  std::vector<VertexId> negative;
};

/// Throws CurvatureSignatureMismatch unless the disk has exactly three
/// negatively curved interior vertices and one positively curved one.
HatSignature hatSignature(const SurfaceMesh& disk);

/// True iff the interior cuts form one simple path from a boundary vertex,
/// through interior vertices only, ending at the center, with at least two
/// cut edges at every negatively curved vertex.
bool lemma3Filter(const SurfaceMesh& disk, const CutSet& cuts);

}  // namespace ununfold
