#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ununfold/mesh.hpp"
#include "ununfold/overlap.hpp"
#include "ununfold/predicates.hpp"
#include "ununfold/unfold.hpp"

namespace ununfold {

// ---------------------------------------------------------------------------
// Dual spanning trees

/// Largest disk whose dual spanning trees are enumerated.
inline constexpr std::size_t kMaxEnumerationFaces = 16;

/// Calls `visit` with the (sorted) interior edges of every spanning tree of
/// the disk's dual graph, each exactly once, in a deterministic order.
/// Throws TooLarge above kMaxEnumerationFaces faces.
void forEachDualSpanningTree(const SurfaceMesh& disk, const std::function<void(std::span<const EdgeId>)>& visit);

std::vector<std::vector<EdgeId>> enumerateDualSpanningTrees(const SurfaceMesh& disk);

/// Number of dual spanning trees by the matrix-tree theorem, evaluated with
/// exact fraction-free elimination. Throws TooLarge if it exceeds 64 bits.
std::uint64_t matrixTreeCount(const SurfaceMesh& mesh);

// ---------------------------------------------------------------------------
// Boundary-to-center cut paths (lemma3Filter)

struct Lemma3Path {
  std::vector<VertexId> vertices;  // boundary vertex first, center last
  std::vector<EdgeId> edges;       // sorted
  std::size_t symmetryClass = 0;
};

struct Lemma3Census {
  std::vector<Lemma3Path> paths;
  std::size_t classCount = 0;
  std::size_t automorphismCount = 0;
};

/// Vertex permutations that map the face set onto itself (orientation
/// reversing ones included). The identity comes first.
std::vector<std::vector<VertexId>> combinatorialAutomorphisms(const SurfaceMesh& mesh);

/// Every cut path accepted by lemma3Filter, grouped into orbits of the hat's
/// combinatorial automorphism group. Throws CurvatureSignatureMismatch.
Lemma3Census enumerateLemma3Paths(const SurfaceMesh& hat);

// ---------------------------------------------------------------------------
// Single-piece impossibility

/// Float-mode overlaps count towards the conclusion only above this margin.
inline constexpr double kFloatConclusionMargin = 1e-6;

struct TreeOutcome {
  std::size_t treeId = 0;
  std::vector<EdgeId> cutEdges;  // interior edges outside the tree
  std::size_t overlapPairs = 0;
  std::size_t decisivePairs = 0;  // certified, or above the float margin
  std::size_t crownOverlapPairs = 0;
  std::size_t escalatedPairs = 0;
  std::size_t uncertifiedTouches = 0;
  bool lemma3Path = false;
};

struct VerificationReport {
  std::string meshId;
  Precision mode = Precision::Interval;
  std::size_t enumerationSize = 0;
  std::uint64_t matrixTreeCount = 0;
  std::vector<TreeOutcome> outcomes;
  /// Whether the disk has a hat's curvature signature. Informational: the
  /// flat control disk is verified too and simply fails the conclusion.
  bool signatureOk = false;
  std::size_t lemma3PathCount = 0;
  std::size_t lemma3SymmetryClasses = 0;
  std::size_t lemma3Trees = 0;
  /// No dual spanning tree develops without a decisive overlap.
  bool conclusion = false;
  /// The conclusion rests on interval certificates only.
  bool certified = false;
  std::optional<std::size_t> witnessTree;
  std::optional<DevelopedPiece> witness;
  double wallTimeMs = 0;
};

struct VerifyOptions {
  Precision mode = Precision::Interval;
  unsigned jobs = 1;
  std::string meshId;
};

/// Develops every dual spanning tree of a hat (every single-piece cut set)
/// and checks each development for overlap.
VerificationReport verifyHatNoSinglePiece(const SurfaceMesh& hat, const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Counting

struct PathSystem {
  /// Base vertices joined by each hat's cut path, in cutting order.
  std::vector<std::pair<VertexId, VertexId>> terminals;
  /// Cycles cut within hats.
  std::size_t cycleCount = 0;
  std::size_t baseVertexCount = 0;
};

/// Pieces forced by cutting the paths in order: each path joining two
/// terminals that are already connected separates off one more piece, and
/// each cycle within a hat separates one more. Throws InvalidParameter for
/// terminals outside the base.
std::size_t minPiecesOfPathSystem(const PathSystem& system);

/// Closed-form piece lower bound: 2k^2 for subdivided caltrops (k >= 1),
/// k + 2 for stacked families (k >= 0).
std::size_t theoremLowerBound(FamilyVariant variant, int k);

}  // namespace ununfold
