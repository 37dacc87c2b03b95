#include "ununfold/audit.hpp"

#include <algorithm>
#include <random>

#include "union_find.hpp"
#include "ununfold/error.hpp"
#include "ununfold/verify.hpp"

namespace ununfold {

AuditReport auditCutSet(const SurfaceMesh& mesh, const CutSet& cuts, Precision mode) {
  if (cuts.universeSize() != mesh.edgeCount()) {
    throw Error(ErrorCode::InvalidCutSet, "cut set was built for a different mesh");
  }
  AuditReport report;
  report.mode = mode;

  for (int h : mesh.hatIds()) {
    const SurfaceMesh disk = regionSubcomplex(mesh, h);
    const ParentMap& parent = *disk.parent();
    CutSet local(disk);
    for (EdgeId e = 0; e < disk.edgeCount(); ++e) {
      if (cuts.isCut(parent.edge[e])) local.cut(e);
    }
    HatAudit hat;
    hat.hatId = h;
    const CutClassification cls = classifyCutsInDisk(disk, local);
    hat.cutClass = cls.kind;
    for (EdgeId e : local.edges()) {
      if (!disk.edge(e).isBoundary()) ++hat.interiorCuts;
    }
    try {
      hat.lemma3Path = lemma3Filter(disk, local);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CurvatureSignatureMismatch) throw;
    }
    report.hats.push_back(hat);
  }

  report.validUnfolding = true;
  for (auto& faces : piecesOf(mesh, cuts)) {
    PieceAudit piece;
    piece.faces = faces;
    try {
      DevelopedPiece dev = developPiece(mesh, cuts, faces);
      piece.developable = true;
      piece.overlapPairs = pieceOverlapReport(mesh, dev, mode).pairs.size();
      piece.development = std::move(dev);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonDevelopablePiece) throw;
      piece.failure = e.what();
    }
    if (!piece.developable || piece.overlapPairs > 0) report.validUnfolding = false;
    report.pieces.push_back(std::move(piece));
  }

  if (const auto family = mesh.family()) {
    report.lowerBound = theoremLowerBound(family->variant, family->k);
    if (report.validUnfolding) report.respectsLowerBound = report.pieces.size() >= *report.lowerBound;
  }
  return report;
}

SearchResult randomizedUnfoldingSearch(const SurfaceMesh& mesh, const SearchOptions& options) {
  SearchResult result;
  std::mt19937_64 rng(options.seed);
  std::vector<EdgeId> interior;
  for (EdgeId e = 0; e < mesh.edgeCount(); ++e) {
    if (!mesh.edge(e).isBoundary()) interior.push_back(e);
  }

  for (std::size_t r = 0; r < options.restarts; ++r) {
    CutSet cuts(mesh);
    for (EdgeId e : interior) cuts.cut(e);
    detail::UnionFind uf(mesh.faceCount());
    std::vector<std::vector<FaceId>> members(mesh.faceCount());
    for (FaceId f = 0; f < mesh.faceCount(); ++f) members[f] = {f};
    std::size_t pieces = mesh.faceCount();

    std::vector<EdgeId> order = interior;
    std::shuffle(order.begin(), order.end(), rng);
    for (EdgeId e : order) {
      ++result.trials;
      const Edge& edge = mesh.edge(e);
      const std::size_t ra = uf.find(edge.f0), rb = uf.find(edge.f1);
      std::vector<FaceId> merged = members[ra];
      if (ra != rb) merged.insert(merged.end(), members[rb].begin(), members[rb].end());
      cuts.uncut(e);
      bool keep = false;
      try {
        const DevelopedPiece dev = developPiece(mesh, cuts, merged);
        keep = pieceOverlapReport(mesh, dev, options.mode).empty();
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NonDevelopablePiece) throw;
      }
      if (!keep) {
        cuts.cut(e);
        continue;
      }
      ++result.acceptedMerges;
      if (ra != rb) {
        uf.unite(ra, rb);
        members[uf.find(ra)] = std::move(merged);
        --pieces;
      }
    }
    ++result.restarts;
    result.piecesPerRestart.push_back(pieces);
    if (!result.best || pieces < result.bestPieces) {
      result.best = cuts;
      result.bestPieces = pieces;
    }
  }
  return result;
}

}  // namespace ununfold
