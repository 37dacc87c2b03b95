#include "ununfold/overlap.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "develop_impl.hpp"
#include "ununfold/error.hpp"

namespace ununfold {

std::size_t OverlapReport::certifiedCount() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const OverlapPair& p) { return p.certified; }));
}

OverlapReport pieceOverlapReport(const SurfaceMesh& mesh, const DevelopedPiece& piece, Precision mode) {
  OverlapReport report;
  report.mode = mode;
  const std::size_t n = piece.plan.size();

  auto record = [&](std::size_t i, std::size_t j, double margin, bool certified) {
    const FaceId a = piece.plan[i].face, b = piece.plan[j].face;
    report.pairs.push_back({std::min(a, b), std::max(a, b), margin, certified});
  };

  if (mode == Precision::Float) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const FloatOverlap fo = classifyTrianglesFloat(piece.triangles[i], piece.triangles[j]);
        if (fo.cls == OverlapClass::Overlap) record(i, j, fo.margin, false);
      }
    }
  } else {
    const auto fast = detail::layoutPlan<IntervalF64>(mesh, piece.plan);
    std::vector<std::pair<std::size_t, std::size_t>> undecided;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const OverlapClass c = detail::classifyCertified(fast[i], fast[j]);
        if (c == OverlapClass::Indeterminate) {
          undecided.emplace_back(i, j);
        } else if (c == OverlapClass::Overlap) {
          record(i, j, classifyTrianglesFloat(piece.triangles[i], piece.triangles[j]).margin, true);
        }
      }
    }
    if (!undecided.empty()) {
      const auto precise = detail::layoutPlan<IntervalMp>(mesh, piece.plan);
      for (const auto& [i, j] : undecided) {
        ++report.escalatedPairs;
        const OverlapClass c = detail::classifyCertified(precise[i], precise[j]);
        const FloatOverlap fo = classifyTrianglesFloat(piece.triangles[i], piece.triangles[j]);
        if (c == OverlapClass::Overlap) {
          record(i, j, fo.margin, true);
        } else if (c == OverlapClass::Indeterminate) {
          if (fo.cls == OverlapClass::Overlap) {
            throw Error(ErrorCode::PrecisionExhausted,
                        "faces " + std::to_string(piece.plan[i].face) + " and " + std::to_string(piece.plan[j].face) +
                            " undecided at 256 bits");
          }
          ++report.uncertifiedTouches;
        }
      }
    }
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const OverlapPair& x, const OverlapPair& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return report;
}

}  // namespace ununfold
