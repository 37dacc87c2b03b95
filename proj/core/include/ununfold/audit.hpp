#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ununfold/mesh.hpp"
#include "ununfold/overlap.hpp"
#include "ununfold/predicates.hpp"
#include "ununfold/unfold.hpp"

namespace ununfold {

struct HatAudit {
  int hatId = -1;
  CutClass cutClass = CutClass::ForestOnePerTree;
  std::size_t interiorCuts = 0;
  /// Empty when the hat region lacks a hat's curvature signature.
  std::optional<bool> lemma3Path;
};

struct PieceAudit {
  std::vector<FaceId> faces;
  bool developable = false;
  /// Reason the piece cannot lie flat, when it cannot.
  std::string failure;
  std::size_t overlapPairs = 0;
  std::optional<DevelopedPiece> development;
};

struct AuditReport {
  Precision mode = Precision::Float;
  std::vector<HatAudit> hats;
  std::vector<PieceAudit> pieces;
  /// Every piece lies flat without overlap.
  bool validUnfolding = false;
  std::optional<std::size_t> lowerBound;
  /// Set for family meshes with a valid unfolding.
  std::optional<bool> respectsLowerBound;
};

/// Per-hat classification of the induced cuts, the pieces, and a
/// development with overlap report for each piece. A piece that cannot lie
/// flat is recorded, not thrown.
AuditReport auditCutSet(const SurfaceMesh& mesh, const CutSet& cuts, Precision mode = Precision::Float);

struct SearchOptions {
  std::uint64_t seed = 20240229;
  std::size_t restarts = 8;
  Precision mode = Precision::Float;
};

struct SearchResult {
  std::optional<CutSet> best;
  std::size_t bestPieces = 0;
  std::size_t restarts = 0;
  std::size_t trials = 0;         // uncut attempts
  std::size_t acceptedMerges = 0;
  std::vector<std::size_t> piecesPerRestart;
};

/// Greedy randomized search for non-overlapping multi-piece unfoldings:
/// start from every edge cut and try to glue edges back in shuffled order,
/// keeping a glue only if the merged piece lies flat without overlap.
SearchResult randomizedUnfoldingSearch(const SurfaceMesh& mesh, const SearchOptions& options = {});

}  // namespace ununfold
