#pragma once

#include <cstddef>
#include <vector>

#include "ununfold/predicates.hpp"
#include "ununfold/unfold.hpp"

namespace ununfold {

struct OverlapPair {
  FaceId a;  // a < b
  FaceId b;
  /// Float-mode penetration depth; informational in interval mode.
  double margin;
  /// Decided by an interval enclosure rather than by the float tolerance.
  bool certified;
};

struct OverlapReport {
  Precision mode = Precision::Interval;
  std::vector<OverlapPair> pairs;
  /// Pairs the double-interval pass could not decide and that were redone
  /// at 256 bits.
  std::size_t escalatedPairs = 0;
  /// Pairs undecided even at 256 bits that the float tolerance classes as a
  /// touch (e.g. coincident boundaries of a flat piece).
  std::size_t uncertifiedTouches = 0;

  bool empty() const noexcept { return pairs.empty(); }
  std::size_t certifiedCount() const;
};

/// All face pairs of a developed piece whose planar images overlap in their
/// interiors. In interval mode the piece is re-laid with double intervals and,
/// for undecided pairs, 256-bit intervals; a pair that stays undecided while
/// the float test reports a positive overlap raises PrecisionExhausted.
OverlapReport pieceOverlapReport(const SurfaceMesh& mesh, const DevelopedPiece& piece, Precision mode);

}  // namespace ununfold
