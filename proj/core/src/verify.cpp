#include "ununfold/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "union_find.hpp"
#include "ununfold/error.hpp"

namespace ununfold {

// ---------------------------------------------------------------------------
// Automorphisms and boundary-to-center cut paths

namespace {

using FaceKey = std::array<VertexId, 3>;

FaceKey sortedFace(const Face& f) {
  FaceKey k{f[0], f[1], f[2]};
  std::sort(k.begin(), k.end());
  return k;
}

struct AutomorphismSearch {
  const SurfaceMesh& mesh;
  std::vector<std::set<VertexId>> neighbours;
  std::set<FaceKey> faces;
  std::vector<VertexId> image;
  std::vector<char> used;
  std::vector<std::vector<VertexId>> found;

  explicit AutomorphismSearch(const SurfaceMesh& m)
      : mesh(m), neighbours(m.vertexCount()), image(m.vertexCount()), used(m.vertexCount(), 0) {
    for (const Edge& e : m.edges()) {
      neighbours[e.v0].insert(e.v1);
      neighbours[e.v1].insert(e.v0);
    }
    for (const Face& f : m.faces()) faces.insert(sortedFace(f));
  }

  bool consistent(VertexId v, VertexId w) const {
    if (neighbours[v].size() != neighbours[w].size()) return false;
    if (mesh.isBoundaryVertex(v) != mesh.isBoundaryVertex(w)) return false;
    for (VertexId u = 0; u < v; ++u) {
      if (neighbours[v].count(u) != neighbours[w].count(image[u])) return false;
    }
    return true;
  }

  void run(VertexId v) {
    if (v == mesh.vertexCount()) {
      for (const Face& f : mesh.faces()) {
        if (!faces.count(sortedFace({image[f[0]], image[f[1]], image[f[2]]}))) return;
      }
      found.push_back(image);
      return;
    }
    for (VertexId w = 0; w < mesh.vertexCount(); ++w) {
      if (used[w] || !consistent(v, w)) continue;
      used[w] = 1;
      image[v] = w;
      run(v + 1);
      used[w] = 0;
    }
  }
};

std::vector<EdgeId> mapEdges(const SurfaceMesh& mesh, const std::vector<VertexId>& sigma, std::span<const EdgeId> edges) {
  std::vector<EdgeId> out;
  for (EdgeId e : edges) {
    const Edge& edge = mesh.edge(e);
    out.push_back(*mesh.findEdge(sigma[edge.v0], sigma[edge.v1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> combinatorialAutomorphisms(const SurfaceMesh& mesh) {
  AutomorphismSearch search(mesh);
  search.run(0);
  return search.found;
}

Lemma3Census enumerateLemma3Paths(const SurfaceMesh& hat) {
  const HatSignature sig = hatSignature(hat);

  // Simple paths from each boundary vertex through interior vertices only,
  // ending at the center; lemma3Filter then imposes the curvature condition.
  Lemma3Census census;
  std::vector<VertexId> stack;
  std::vector<char> onPath(hat.vertexCount(), 0);
  std::vector<std::vector<VertexId>> neighbours(hat.vertexCount());
  for (const Edge& e : hat.edges()) {
    if (e.isBoundary()) continue;
    neighbours[e.v0].push_back(e.v1);
    neighbours[e.v1].push_back(e.v0);
  }
  auto extend = [&](auto&& self, VertexId v) -> void {
    if (v == sig.center) {
      Lemma3Path path;
      path.vertices = stack;
      CutSet cuts(hat);
      for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
        const EdgeId e = *hat.findEdge(stack[i], stack[i + 1]);
        path.edges.push_back(e);
        cuts.cut(e);
      }
      std::sort(path.edges.begin(), path.edges.end());
      if (lemma3Filter(hat, cuts)) census.paths.push_back(std::move(path));
      return;
    }
    for (VertexId w : neighbours[v]) {
      if (onPath[w] || hat.isBoundaryVertex(w)) continue;
      onPath[w] = 1;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      onPath[w] = 0;
    }
  };
  for (VertexId b = 0; b < hat.vertexCount(); ++b) {
    if (!hat.isBoundaryVertex(b)) continue;
    stack = {b};
    onPath.assign(hat.vertexCount(), 0);
    onPath[b] = 1;
    extend(extend, b);
  }
  std::sort(census.paths.begin(), census.paths.end(),
            [](const Lemma3Path& x, const Lemma3Path& y) { return x.edges < y.edges; });

  const auto group = combinatorialAutomorphisms(hat);
  census.automorphismCount = group.size();
  std::map<std::vector<EdgeId>, std::size_t> classOfCanonical;
  for (Lemma3Path& p : census.paths) {
    std::vector<EdgeId> canonical = p.edges;
    for (const auto& sigma : group) canonical = std::min(canonical, mapEdges(hat, sigma, p.edges));
    auto [it, inserted] = classOfCanonical.try_emplace(canonical, classOfCanonical.size());
    p.symmetryClass = it->second;
  }
  census.classCount = classOfCanonical.size();
  return census;
}

// ---------------------------------------------------------------------------
// Single-piece impossibility

namespace {

TreeOutcome examineTree(const SurfaceMesh& hat, std::span<const FaceId> allFaces, std::span<const EdgeId> tree,
                        std::size_t id, Precision mode, bool signatureOk, std::optional<DevelopedPiece>* keep) {
  TreeOutcome out;
  out.treeId = id;
  CutSet cuts(hat);
  std::vector<char> inTree(hat.edgeCount(), 0);
  for (EdgeId e : tree) inTree[e] = 1;
  for (EdgeId e = 0; e < hat.edgeCount(); ++e) {
    if (!hat.edge(e).isBoundary() && !inTree[e]) {
      out.cutEdges.push_back(e);
      cuts.cut(e);
    }
  }
  DevelopedPiece piece = developTree(hat, allFaces, tree);
  const OverlapReport report = pieceOverlapReport(hat, piece, mode);
  out.overlapPairs = report.pairs.size();
  out.escalatedPairs = report.escalatedPairs;
  out.uncertifiedTouches = report.uncertifiedTouches;
  for (const OverlapPair& p : report.pairs) {
    const bool decisive = mode == Precision::Interval ? p.certified : p.margin > kFloatConclusionMargin;
    if (decisive) ++out.decisivePairs;
    if (hat.label(p.a).region == RegionLabel::Crown || hat.label(p.b).region == RegionLabel::Crown) {
      ++out.crownOverlapPairs;
    }
  }
  out.lemma3Path = signatureOk && lemma3Filter(hat, cuts);
  if (keep && out.decisivePairs == 0) *keep = std::move(piece);
  return out;
}

}  // namespace

VerificationReport verifyHatNoSinglePiece(const SurfaceMesh& hat, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (hat.isClosed()) throw Error(ErrorCode::NotADisk, "hat verification needs a disk");

  VerificationReport report;
  report.meshId = options.meshId;
  report.mode = options.mode;

  const auto trees = enumerateDualSpanningTrees(hat);
  report.enumerationSize = trees.size();
  report.matrixTreeCount = matrixTreeCount(hat);
  if (report.matrixTreeCount != trees.size()) {
    throw Error(ErrorCode::EnumerationMismatch, "enumerated " + std::to_string(trees.size()) +
                                                    " trees, matrix-tree theorem gives " +
                                                    std::to_string(report.matrixTreeCount));
  }

  try {
    hatSignature(hat);
    report.signatureOk = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CurvatureSignatureMismatch) throw;
  }
  if (report.signatureOk) {
    const Lemma3Census census = enumerateLemma3Paths(hat);
    report.lemma3PathCount = census.paths.size();
    report.lemma3SymmetryClasses = census.classCount;
  }

  std::vector<FaceId> allFaces(hat.faceCount());
  for (FaceId f = 0; f < hat.faceCount(); ++f) allFaces[f] = f;

  report.outcomes.resize(trees.size());
  std::vector<std::exception_ptr> errors(trees.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trees.size(); i = next++) {
      try {
        report.outcomes[i] = examineTree(hat, allFaces, trees[i], i, options.mode, report.signatureOk, nullptr);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.conclusion = true;
  for (const TreeOutcome& o : report.outcomes) {
    if (o.lemma3Path) ++report.lemma3Trees;
    if (o.decisivePairs == 0 && report.conclusion) {
      report.conclusion = false;
      report.witnessTree = o.treeId;
      std::optional<DevelopedPiece> witness;
      examineTree(hat, allFaces, trees[o.treeId], o.treeId, options.mode, report.signatureOk, &witness);
      report.witness = std::move(witness);
    }
  }
  report.certified = report.conclusion && options.mode == Precision::Interval;
  report.wallTimeMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Counting

std::size_t minPiecesOfPathSystem(const PathSystem& system) {
  detail::UnionFind uf(system.baseVertexCount);
  std::size_t separations = 0;
  for (const auto& [a, b] : system.terminals) {
    if (a >= system.baseVertexCount || b >= system.baseVertexCount) {
      throw Error(ErrorCode::InvalidParameter, "path terminal is not a base vertex");
    }
    if (!uf.unite(a, b)) ++separations;
  }
  return 1 + separations + system.cycleCount;
}

std::size_t theoremLowerBound(FamilyVariant variant, int k) {
  switch (variant) {
    case FamilyVariant::AcuteSubdivided:
      if (k < 1) throw Error(ErrorCode::InvalidParameter, "subdivided caltrop needs k >= 1");
      return 2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    case FamilyVariant::StackedFamily:
      if (k < 0) throw Error(ErrorCode::InvalidParameter, "stacked family needs k >= 0");
      return static_cast<std::size_t>(k) + 2;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family variant");
}

}  // namespace ununfold
