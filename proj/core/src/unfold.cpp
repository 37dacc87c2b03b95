#include "ununfold/unfold.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "develop_impl.hpp"
#include "union_find.hpp"
#include "ununfold/error.hpp"

namespace ununfold {

CutSet::CutSet(const SurfaceMesh& mesh, std::span<const EdgeId> edges) : cut_(mesh.edgeCount(), 0) {
  for (EdgeId e : edges) {
    if (e >= cut_.size()) throw Error(ErrorCode::InvalidCutSet, "edge id " + std::to_string(e) + " out of range");
    cut_[e] = 1;
  }
}

CutSet CutSet::fromVertexPairs(const SurfaceMesh& mesh, std::span<const std::pair<VertexId, VertexId>> pairs) {
  CutSet out(mesh);
  for (const auto& [a, b] : pairs) {
    const auto e = mesh.findEdge(a, b);
    if (!e) {
      throw Error(ErrorCode::InvalidCutSet,
                  "no edge between vertices " + std::to_string(a) + " and " + std::to_string(b));
    }
    out.cut(*e);
  }
  return out;
}

std::vector<EdgeId> CutSet::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < cut_.size(); ++e) {
    if (cut_[e]) out.push_back(e);
  }
  return out;
}

std::size_t CutSet::size() const { return static_cast<std::size_t>(std::count(cut_.begin(), cut_.end(), 1)); }

namespace {

void checkUniverse(const SurfaceMesh& mesh, const CutSet& cuts) {
  if (cuts.universeSize() != mesh.edgeCount()) {
    throw Error(ErrorCode::InvalidCutSet, "cut set was built for a different mesh");
  }
}

bool joins(const SurfaceMesh& mesh, const CutSet& cuts, EdgeId e) {
  return !mesh.edge(e).isBoundary() && !cuts.isCut(e);
}

std::array<EdgeId, 3> sortedEdges(const SurfaceMesh& mesh, FaceId f) {
  std::array<EdgeId, 3> fe = mesh.faceEdges(f);
  std::sort(fe.begin(), fe.end());
  return fe;
}

double planarDistance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

DevelopedPiece finishPiece(const SurfaceMesh& mesh, std::vector<FaceId> faces, std::vector<DevelopStep> plan) {
  DevelopedPiece piece;
  std::sort(faces.begin(), faces.end());
  piece.faces = std::move(faces);
  piece.triangles = detail::layoutPlan<double>(mesh, plan);
  piece.plan = std::move(plan);
  return piece;
}

}  // namespace

std::size_t DevelopedPiece::indexOf(FaceId f) const {
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (plan[i].face == f) return i;
  }
  throw Error(ErrorCode::IndexOutOfRange, "face " + std::to_string(f) + " is not in this piece");
}

bool DevelopedPiece::isTreeEdge(EdgeId e) const {
  return std::any_of(plan.begin(), plan.end(),
                     [e](const DevelopStep& s) { return s.parent != kNoFace && s.edge == e; });
}

DualGraph dualGraph(const SurfaceMesh& mesh, const CutSet& cuts) {
  checkUniverse(mesh, cuts);
  DualGraph g;
  g.nodeCount = mesh.faceCount();
  for (EdgeId e = 0; e < mesh.edgeCount(); ++e) {
    if (joins(mesh, cuts, e)) g.arcs.push_back({e, mesh.edge(e).f0, mesh.edge(e).f1});
  }
  return g;
}

std::vector<std::vector<FaceId>> piecesOf(const SurfaceMesh& mesh, const CutSet& cuts) {
  const DualGraph g = dualGraph(mesh, cuts);
  detail::UnionFind uf(g.nodeCount);
  for (const DualArc& a : g.arcs) uf.unite(a.a, a.b);
  std::vector<std::vector<FaceId>> pieces;
  std::vector<std::size_t> pieceOfRoot(g.nodeCount, static_cast<std::size_t>(-1));
  for (FaceId f = 0; f < g.nodeCount; ++f) {
    const std::size_t r = uf.find(f);
    if (pieceOfRoot[r] == static_cast<std::size_t>(-1)) {
      pieceOfRoot[r] = pieces.size();
      pieces.emplace_back();
    }
    pieces[pieceOfRoot[r]].push_back(f);
  }
  return pieces;
}

DevelopedPiece developPiece(const SurfaceMesh& mesh, const CutSet& cuts, std::span<const FaceId> faces) {
  checkUniverse(mesh, cuts);
  if (faces.empty()) throw Error(ErrorCode::InvalidCutSet, "empty piece");
  std::vector<char> member(mesh.faceCount(), 0), visited(mesh.faceCount(), 0);
  for (FaceId f : faces) member.at(f) = 1;
  const FaceId root = *std::min_element(faces.begin(), faces.end());

  std::vector<DevelopStep> plan{{root, kNoFace, 0}};
  std::vector<EdgeId> closing;
  std::vector<char> seenEdge(mesh.edgeCount(), 0);
  visited[root] = 1;
  for (std::size_t head = 0; head < plan.size(); ++head) {
    const FaceId f = plan[head].face;
    for (EdgeId e : sortedEdges(mesh, f)) {
      if (!joins(mesh, cuts, e) || seenEdge[e]) continue;
      seenEdge[e] = 1;
      const FaceId g = mesh.edge(e).other(f);
      if (!member[g]) throw Error(ErrorCode::InvalidCutSet, "piece is not closed under uncut adjacency");
      if (visited[g]) {
        closing.push_back(e);
        continue;
      }
      visited[g] = 1;
      plan.push_back({g, f, e});
    }
  }
  if (plan.size() != faces.size()) throw Error(ErrorCode::InvalidCutSet, "piece is not connected by uncut edges");

  DevelopedPiece piece = finishPiece(mesh, {faces.begin(), faces.end()}, std::move(plan));
  for (EdgeId e : closing) {
    const Edge& edge = mesh.edge(e);
    const Triangle2& t0 = piece.triangleOf(edge.f0);
    const Triangle2& t1 = piece.triangleOf(edge.f1);
    for (VertexId v : {edge.v0, edge.v1}) {
      const double gap = planarDistance(t0[mesh.cornerOf(edge.f0, v)], t1[mesh.cornerOf(edge.f1, v)]);
      if (!(gap <= kDevelopTolerance)) {
        throw Error(ErrorCode::NonDevelopablePiece, "uncut edge " + std::to_string(e) + " (" +
                                                        std::to_string(edge.v0) + "-" + std::to_string(edge.v1) +
                                                        ") does not close up in the plane");
      }
    }
  }
  return piece;
}

Unfolding develop(const SurfaceMesh& mesh, const CutSet& cuts) {
  Unfolding out;
  for (const auto& faces : piecesOf(mesh, cuts)) out.pieces.push_back(developPiece(mesh, cuts, faces));
  return out;
}

DevelopedPiece developTree(const SurfaceMesh& mesh, std::span<const FaceId> faces, std::span<const EdgeId> treeEdges) {
  if (faces.empty()) throw Error(ErrorCode::InvalidCutSet, "empty piece");
  if (treeEdges.size() + 1 != faces.size()) {
    throw Error(ErrorCode::InvalidCutSet, "a spanning tree on n faces has n - 1 edges");
  }
  std::vector<char> member(mesh.faceCount(), 0), visited(mesh.faceCount(), 0), inTree(mesh.edgeCount(), 0);
  for (FaceId f : faces) member.at(f) = 1;
  for (EdgeId e : treeEdges) {
    if (e >= mesh.edgeCount() || mesh.edge(e).isBoundary()) {
      throw Error(ErrorCode::InvalidCutSet, "tree edge is not an interior edge");
    }
    inTree[e] = 1;
  }
  const FaceId root = *std::min_element(faces.begin(), faces.end());
  std::vector<DevelopStep> plan{{root, kNoFace, 0}};
  visited[root] = 1;
  for (std::size_t head = 0; head < plan.size(); ++head) {
    const FaceId f = plan[head].face;
    for (EdgeId e : sortedEdges(mesh, f)) {
      if (!inTree[e]) continue;
      const FaceId g = mesh.edge(e).other(f);
      if (!member[g]) throw Error(ErrorCode::InvalidCutSet, "tree edge leaves the piece");
      if (visited[g]) continue;
      visited[g] = 1;
      plan.push_back({g, f, e});
    }
  }
  if (plan.size() != faces.size()) throw Error(ErrorCode::InvalidCutSet, "tree edges do not span the piece");
  return finishPiece(mesh, {faces.begin(), faces.end()}, std::move(plan));
}

}  // namespace ununfold
