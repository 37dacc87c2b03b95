#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "union_find.hpp"
#include "ununfold/error.hpp"
#include "ununfold/unfold.hpp"

namespace ununfold {

std::string_view toString(CutClass c) noexcept {
  switch (c) {
    case CutClass::SeparatingCycle: return "separating-cycle";
    case CutClass::BoundaryToBoundaryPath: return "boundary-path";
    case CutClass::ForestOnePerTree: return "forest";
  }
  return "forest";
}

namespace {

struct Adjacent {
  VertexId to;
  EdgeId edge;
};

using Adjacency = std::map<VertexId, std::vector<Adjacent>>;

/// Breadth-first path from `from` to `to` in a forest; returns the vertex
/// sequence and the edges along it.
std::pair<std::vector<VertexId>, std::vector<EdgeId>> forestPath(const Adjacency& adj, VertexId from, VertexId to) {
  std::map<VertexId, Adjacent> cameFrom;
  std::queue<VertexId> queue;
  queue.push(from);
  cameFrom[from] = {from, 0};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    if (v == to) break;
    const auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const Adjacent& a : it->second) {
      if (cameFrom.count(a.to)) continue;
      cameFrom[a.to] = {v, a.edge};
      queue.push(a.to);
    }
  }
  std::vector<VertexId> vertices{to};
  std::vector<EdgeId> edges;
  for (VertexId v = to; v != from;) {
    const Adjacent& step = cameFrom.at(v);
    edges.push_back(step.edge);
    v = step.to;
    vertices.push_back(v);
  }
  std::reverse(vertices.begin(), vertices.end());
  std::reverse(edges.begin(), edges.end());
  return {vertices, edges};
}

std::vector<EdgeId> interiorCuts(const SurfaceMesh& disk, const CutSet& cuts) {
  if (cuts.universeSize() != disk.edgeCount()) {
    throw Error(ErrorCode::InvalidCutSet, "cut set was built for a different mesh");
  }
  std::vector<EdgeId> out;
  for (EdgeId e : cuts.edges()) {
    if (!disk.edge(e).isBoundary()) out.push_back(e);
  }
  return out;
}

}  // namespace

CutClassification classifyCutsInDisk(const SurfaceMesh& disk, const CutSet& cuts) {
  if (disk.isClosed()) throw Error(ErrorCode::NotADisk, "cut classification needs a disk");
  const std::vector<EdgeId> edges = interiorCuts(disk, cuts);

  CutClassification out;
  detail::UnionFind uf(disk.vertexCount());
  Adjacency adj;
  for (EdgeId e : edges) {
    const Edge& edge = disk.edge(e);
    if (!uf.unite(edge.v0, edge.v1)) {
      out.kind = CutClass::SeparatingCycle;
      out.cycle = forestPath(adj, edge.v0, edge.v1).second;
      out.cycle.push_back(e);
      return out;
    }
    adj[edge.v0].push_back({edge.v1, e});
    adj[edge.v1].push_back({edge.v0, e});
  }

  // Components in order of their smallest vertex.
  std::map<std::size_t, std::vector<VertexId>> boundaryByRoot;
  std::map<std::size_t, std::vector<EdgeId>> edgesByRoot;
  std::vector<std::size_t> rootOrder;
  for (const auto& [v, _] : adj) {
    const std::size_t r = uf.find(v);
    if (!edgesByRoot.count(r)) {
      rootOrder.push_back(r);
      edgesByRoot[r];
    }
    if (disk.isBoundaryVertex(v)) boundaryByRoot[r].push_back(v);
  }
  for (EdgeId e : edges) edgesByRoot[uf.find(disk.edge(e).v0)].push_back(e);

  for (std::size_t r : rootOrder) {
    const auto& b = boundaryByRoot[r];
    if (b.size() >= 2) {
      out.kind = CutClass::BoundaryToBoundaryPath;
      out.path = forestPath(adj, b[0], b[1]).first;
      return out;
    }
  }
  out.kind = CutClass::ForestOnePerTree;
  for (std::size_t r : rootOrder) out.trees.push_back(edgesByRoot[r]);
  return out;
}

HatSignature hatSignature(const SurfaceMesh& disk) {
  if (disk.isClosed()) throw Error(ErrorCode::NotADisk, "hat signature needs a disk");
  const CurvatureReport report = curvatureReport(disk);
  HatSignature sig{};
  std::size_t positive = 0, interior = 0;
  for (VertexId v = 0; v < disk.vertexCount(); ++v) {
    const VertexCurvature& c = report.vertices[v];
    if (c.boundary) continue;
    ++interior;
    if (c.deficit < -kAngleToleranceDeg) sig.negative.push_back(v);
    if (c.deficit > kAngleToleranceDeg) {
      sig.center = v;
      ++positive;
    }
  }
  if (sig.negative.size() != 3 || positive != 1 || interior != 4) {
    throw Error(ErrorCode::CurvatureSignatureMismatch,
                "expected 3 negative and 1 positive interior vertices, found " + std::to_string(sig.negative.size()) +
                    " negative, " + std::to_string(positive) + " positive among " + std::to_string(interior));
  }
  return sig;
}

bool lemma3Filter(const SurfaceMesh& disk, const CutSet& cuts) {
  const HatSignature sig = hatSignature(disk);
  const std::vector<EdgeId> edges = interiorCuts(disk, cuts);
  if (edges.empty()) return false;

  std::map<VertexId, int> degree;
  detail::UnionFind uf(disk.vertexCount());
  for (EdgeId e : edges) {
    const Edge& edge = disk.edge(e);
    if (!uf.unite(edge.v0, edge.v1)) return false;  // contains a cycle
    ++degree[edge.v0];
    ++degree[edge.v1];
  }
  // A forest with |V| - 1 edges on its touched vertices is a single tree.
  if (degree.size() != edges.size() + 1) return false;

  std::vector<VertexId> ends;
  for (const auto& [v, d] : degree) {
    if (d > 2) return false;
    if (d == 1) ends.push_back(v);
    if (d == 2 && disk.isBoundaryVertex(v)) return false;  // the path runs through the boundary
  }
  if (ends.size() != 2) return false;
  const bool ordered = disk.isBoundaryVertex(ends[0]) && ends[1] == sig.center;
  const bool reversed = disk.isBoundaryVertex(ends[1]) && ends[0] == sig.center;
  if (!ordered && !reversed) return false;
  for (VertexId n : sig.negative) {
    const auto it = degree.find(n);
    if (it == degree.end() || it->second < 2) return false;
  }
  return true;
}

}  // namespace ununfold
