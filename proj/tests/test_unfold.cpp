#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ununfold/constructions.hpp"
#include "ununfold/error.hpp"
#include "ununfold/overlap.hpp"
#include "ununfold/unfold.hpp"
#include "ununfold/verify.hpp"

using namespace ununfold;

namespace {

template <class Fn>
ErrorCode codeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ununfold::Error";
  return ErrorCode::IoError;
}

double planarLength(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

void expectIsometric(const SurfaceMesh& mesh, const DevelopedPiece& piece) {
  for (std::size_t k = 0; k < piece.plan.size(); ++k) {
    const Face& f = mesh.face(piece.plan[k].face);
    const Triangle2& t = piece.triangles[k];
    for (int i = 0; i < 3; ++i) {
      const double planar = planarLength(t[i], t[(i + 1) % 3]);
      const double spatial = distance(mesh.vertex(f[i]), mesh.vertex(f[(i + 1) % 3]));
      EXPECT_NEAR(planar, spatial, 1e-9);
    }
    // Counterclockwise in the plane.
    const double area2 = (t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x);
    EXPECT_GT(area2, 0.0);
  }
}

CutSet pathCuts(const SurfaceMesh& m, std::initializer_list<VertexId> vs) {
  CutSet cuts(m);
  std::vector<VertexId> path(vs);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) cuts.cut(*m.findEdge(path[i], path[i + 1]));
  return cuts;
}

CutSet allInteriorCut(const SurfaceMesh& m) {
  CutSet cuts(m);
  for (EdgeId e = 0; e < m.edgeCount(); ++e) {
    if (!m.edge(e).isBoundary()) cuts.cut(e);
  }
  return cuts;
}

}  // namespace

TEST(CutSet, ConstructionAndErrors) {
  const SurfaceMesh t = regularTetrahedron();
  const std::vector<EdgeId> ids{0, 2};
  const CutSet c(t, ids);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.edges(), ids);
  const std::vector<EdgeId> bad{9};
  EXPECT_EQ(codeOf([&] { CutSet(t, bad); }), ErrorCode::InvalidCutSet);
  const std::vector<std::pair<VertexId, VertexId>> pairs{{0, 1}, {0, 0}};
  EXPECT_EQ(codeOf([&] { CutSet::fromVertexPairs(t, pairs); }), ErrorCode::InvalidCutSet);
  const CutSet wrong(acuteHat().mesh);
  EXPECT_EQ(codeOf([&] { piecesOf(t, wrong); }), ErrorCode::InvalidCutSet);
}

TEST(Develop, SingleTriangleRootPlacement) {
  const SurfaceMesh m = buildMesh({{0, 0, 1}, {0, 2, 1}, {0, 0, 3}}, {{0, 1, 2}});
  const Unfolding u = develop(m, CutSet(m));
  ASSERT_EQ(u.pieces.size(), 1u);
  const Triangle2& t = u.pieces[0].triangles[0];
  // Edge 0 is (0,1): from the origin along +x.
  EXPECT_EQ(t[0].x, 0.0);
  EXPECT_EQ(t[0].y, 0.0);
  EXPECT_NEAR(t[1].x, 2.0, 1e-15);
  EXPECT_EQ(t[1].y, 0.0);
  EXPECT_NEAR(t[2].x, 0.0, 1e-15);
  EXPECT_NEAR(t[2].y, 2.0, 1e-15);
  EXPECT_TRUE(pieceOverlapReport(m, u.pieces[0], Precision::Interval).empty());
}

TEST(Develop, AllInteriorCutGivesSingletons) {
  const SurfaceMesh hat = acuteHat().mesh;
  const Unfolding u = develop(hat, allInteriorCut(hat));
  EXPECT_EQ(u.pieces.size(), 9u);
  for (const auto& p : u.pieces) EXPECT_EQ(p.faces.size(), 1u);
}

TEST(Develop, ClosedSurfaceWithoutCutsCannotLieFlat) {
  const SurfaceMesh c = caltrop();
  EXPECT_EQ(piecesOf(c, CutSet(c)).size(), 1u);
  EXPECT_EQ(codeOf([&] { develop(c, CutSet(c)); }), ErrorCode::NonDevelopablePiece);
}

TEST(Develop, HatWithoutInteriorCutsCannotLieFlat) {
  const SurfaceMesh hat = acuteHat().mesh;
  EXPECT_EQ(codeOf([&] { develop(hat, CutSet(hat)); }), ErrorCode::NonDevelopablePiece);
  // The flat control lies flat with no cuts at all.
  const SurfaceMesh flat = flatHatControl();
  const Unfolding u = develop(flat, CutSet(flat));
  ASSERT_EQ(u.pieces.size(), 1u);
  EXPECT_TRUE(pieceOverlapReport(flat, u.pieces[0], Precision::Float).empty());
}

TEST(Develop, IsometryOnEveryHatTree) {
  const SurfaceMesh hat = acuteHat().mesh;
  std::vector<FaceId> faces(hat.faceCount());
  for (FaceId f = 0; f < faces.size(); ++f) faces[f] = f;
  forEachDualSpanningTree(hat, [&](std::span<const EdgeId> tree) { expectIsometric(hat, developTree(hat, faces, tree)); });
}

TEST(Develop, TreeDevelopmentMatchesCutDevelopment) {
  const SurfaceMesh hat = acuteHat().mesh;
  const CutSet cuts = pathCuts(hat, {0, 4, 3, 5, 6});
  const auto pieces = piecesOf(hat, cuts);
  ASSERT_EQ(pieces.size(), 1u);
  const DevelopedPiece viaCuts = developPiece(hat, cuts, pieces[0]);
  std::vector<EdgeId> tree;
  for (EdgeId e = 0; e < hat.edgeCount(); ++e) {
    if (!hat.edge(e).isBoundary() && !cuts.isCut(e)) tree.push_back(e);
  }
  const DevelopedPiece viaTree = developTree(hat, pieces[0], tree);
  for (FaceId f = 0; f < 9; ++f) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(viaCuts.triangleOf(f)[c].x, viaTree.triangleOf(f)[c].x);
      EXPECT_EQ(viaCuts.triangleOf(f)[c].y, viaTree.triangleOf(f)[c].y);
    }
  }
}

TEST(Develop, PieceCountMatchesCycleRankOnClosedMeshes) {
  std::mt19937_64 rng(5);
  for (const SurfaceMesh& m : {regularTetrahedron(), caltrop(), stackedFamily(2).mesh}) {
    for (int trial = 0; trial < 200; ++trial) {
      CutSet cuts(m);
      std::bernoulli_distribution pick(0.1 + 0.4 * (trial % 5) / 4.0);
      for (EdgeId e = 0; e < m.edgeCount(); ++e) {
        if (pick(rng)) cuts.cut(e);
      }
      const std::size_t pieces = piecesOf(m, cuts).size();
      EXPECT_EQ(pieces, oracle::pieceCountBfs(m, cuts));
      EXPECT_EQ(pieces, 1 + oracle::cutGraphCycleRank(m, cuts));
    }
  }
}

TEST(Develop, RandomValidPiecesAreIsometric) {
  const SurfaceMesh c = caltrop();
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    CutSet cuts(c);
    std::bernoulli_distribution pick(0.7);
    for (EdgeId e = 0; e < c.edgeCount(); ++e) {
      if (pick(rng)) cuts.cut(e);
    }
    for (const auto& faces : piecesOf(c, cuts)) {
      try {
        expectIsometric(c, developPiece(c, cuts, faces));
        ++checked;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonDevelopablePiece);
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Classify, Trichotomy) {
  const SurfaceMesh hat = acuteHat().mesh;
  const CutClassification cycle = classifyCutsInDisk(hat, pathCuts(hat, {3, 4, 5, 3}));
  EXPECT_EQ(cycle.kind, CutClass::SeparatingCycle);
  EXPECT_EQ(cycle.cycle.size(), 3u);

  // B1 -> N3 -> B2 joins two boundary vertices.
  const CutClassification path = classifyCutsInDisk(hat, pathCuts(hat, {0, 5, 1}));
  EXPECT_EQ(path.kind, CutClass::BoundaryToBoundaryPath);
  EXPECT_EQ(path.path, (std::vector<VertexId>{0, 5, 1}));

  const CutClassification forest = classifyCutsInDisk(hat, pathCuts(hat, {0, 4, 3, 5, 6}));
  EXPECT_EQ(forest.kind, CutClass::ForestOnePerTree);
  ASSERT_EQ(forest.trees.size(), 1u);
  EXPECT_EQ(forest.trees[0].size(), 4u);

  EXPECT_EQ(classifyCutsInDisk(hat, CutSet(hat)).kind, CutClass::ForestOnePerTree);
  EXPECT_EQ(codeOf([] { classifyCutsInDisk(caltrop(), CutSet(caltrop())); }), ErrorCode::NotADisk);
}

TEST(Lemma3Filter, Examples) {
  const SurfaceMesh hat = acuteHat().mesh;
  EXPECT_TRUE(lemma3Filter(hat, pathCuts(hat, {0, 4, 3, 5, 6})));
  EXPECT_TRUE(lemma3Filter(hat, pathCuts(hat, {0, 4, 5, 3, 6})));
  EXPECT_FALSE(lemma3Filter(hat, CutSet(hat)));
  // Misses N2 (id 4).
  EXPECT_FALSE(lemma3Filter(hat, pathCuts(hat, {0, 5, 3, 6})));
  // A tree with a degree-three vertex at N1.
  CutSet tree = pathCuts(hat, {1, 3, 4, 6});
  tree.cut(*hat.findEdge(3, 5));
  EXPECT_FALSE(lemma3Filter(hat, tree));
  EXPECT_EQ(codeOf([] {
              const SurfaceMesh flat = flatHatControl();
              lemma3Filter(flat, CutSet(flat));
            }),
            ErrorCode::CurvatureSignatureMismatch);
}

TEST(Lemma3Filter, CompleteOverAllInteriorSubsets) {
  // Single piece, at least two cuts at every negative vertex, and no
  // cut tree touching the boundary twice: exactly the accepted paths.
  const SurfaceMesh hat = acuteHat().mesh;
  const CurvatureReport curvature = curvatureReport(hat);
  std::vector<EdgeId> interior;
  for (EdgeId e = 0; e < hat.edgeCount(); ++e) {
    if (!hat.edge(e).isBoundary()) interior.push_back(e);
  }
  ASSERT_EQ(interior.size(), 12u);
  std::size_t accepted = 0;
  for (unsigned mask = 0; mask < 4096; ++mask) {
    CutSet cuts(hat);
    for (unsigned i = 0; i < 12; ++i) {
      if (mask & (1u << i)) cuts.cut(interior[i]);
    }
    bool lemma1 = true;
    for (VertexId v = 0; v < hat.vertexCount(); ++v) {
      if (curvature.vertices[v].boundary || curvature.vertices[v].deficit >= 0) continue;
      int degree = 0;
      for (EdgeId e : cuts.edges()) degree += hat.edge(e).hasVertex(v) ? 1 : 0;
      lemma1 = lemma1 && degree >= 2;
    }
    const bool compatible = oracle::pieceCountBfs(hat, cuts) == 1 && lemma1 &&
                            classifyCutsInDisk(hat, cuts).kind == CutClass::ForestOnePerTree;
    const bool filter = lemma3Filter(hat, cuts);
    EXPECT_EQ(compatible, filter) << "mask " << mask;
    accepted += filter ? 1 : 0;
  }
  EXPECT_EQ(accepted, 12u);
}

TEST(Development, ChainAngleAlongPaths) {
  // Brim and band laid flat as one strip, opened at the path's first cut:
  // the chain of N-N edges bends by the angle left over for the crown.
  const SurfaceMesh hat = acuteHat().mesh;
  const std::vector<FaceId> ring{0, 1, 2, 3, 4, 5};
  for (const auto& path : {std::vector<VertexId>{0, 4, 3, 5}, std::vector<VertexId>{0, 4, 5, 3}}) {
    CutSet cuts(hat);
    cuts.cut(*hat.findEdge(path[0], path[1]));
    for (auto [u, w] : {std::pair<VertexId, VertexId>{3, 4}, {4, 5}, {5, 3}}) cuts.cut(*hat.findEdge(u, w));
    const DevelopedPiece strip = developPiece(hat, cuts, ring);
    // Position of v in the strip face carrying edge u-w.
    auto image = [&](VertexId u, VertexId w, VertexId v) {
      for (std::size_t k = 0; k < strip.plan.size(); ++k) {
        const FaceId f = strip.plan[k].face;
        const Face& fv = hat.face(f);
        if (std::count(fv.begin(), fv.end(), u) && std::count(fv.begin(), fv.end(), w)) {
          return strip.triangles[k][static_cast<std::size_t>(hat.cornerOf(f, v))];
        }
      }
      return Point2{NAN, NAN};
    };
    const std::vector<VertexId> chain{path[1], path[2], path[3], path[1]};
    for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
      const VertexId p = chain[j - 1], q = chain[j], r = chain[j + 1];
      const Point2 pi = image(p, q, p), qi = image(p, q, q), ri = image(q, r, r);
      EXPECT_EQ(qi, image(q, r, q));
      const double a = std::atan2(pi.y - qi.y, pi.x - qi.x), b = std::atan2(ri.y - qi.y, ri.x - qi.x);
      double deg = std::abs(radToDeg(a - b));
      if (deg > 180) deg = 360 - deg;
      EXPECT_NEAR(deg, 105.0, 1e-6);
    }
  }
}
