#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "ununfold/mesh.hpp"

namespace ununfold {

using Triangle3 = std::array<Point3, 3>;

/// Angles (degrees) of the all-acute hat. Brim triangles sit on the boundary
/// edges; band and crown triangles are the congruent thin isosceles spikes.
struct AcuteHatSpec {
  double brimApexDeg = 85.0;
  double brimBaseDeg = 47.5;
  double bandBaseDeg = 85.0;
  double bandApexDeg = 10.0;
  double boundarySide = 1.0;

  /// Length of every boundary-to-interior and interior-to-center edge.
  double legLength() const { return boundarySide / (2.0 * std::cos(degToRad(brimBaseDeg))); }
  /// Length of the three edges joining the negatively curved vertices.
  double innerEdgeLength() const { return 2.0 * legLength() * std::sin(degToRad(bandApexDeg / 2.0)); }
};

/// Outcome of the symmetric embedding solve for the acute hat.
struct EmbeddingDiagnostics {
  double radius = 0;        // cylindrical radius of the interior ring vertices
  double phaseDeg = 0;      // angular position of the first ring vertex
  double ringHeight = 0;    // height of the ring above the base plane
  double centerHeight = 0;  // height of the center vertex
  int iterations = 0;
  double residual = 0;             // max |constraint residual| at exit
  double maxEdgeRelativeError = 0; // over all 15 edges
  double maxAngleErrorDeg = 0;     // over all 27 face corners
};

struct AcuteHat {
  SurfaceMesh mesh;
  EmbeddingDiagnostics diagnostics;
};

/// Builds the 7-vertex, 9-face acute hat in its local frame: the boundary is the
/// equilateral triangle B1B2B3 centred at the origin in z = 0 (B1B2 along +x),
/// and the hat rises towards +z.
///
/// Vertex ids: 0..2 = B1..B3, 3..5 = N1..N3 (N_i is the brim apex over the
/// boundary edge opposite B_i), 6 = center C. Faces are brim, band, crown in
/// that order, three each.
AcuteHat acuteHat(const AcuteHatSpec& spec = {});

/// Planar control: the acute hat's combinatorics with every vertex flattened
/// into z = 0, so all interior vertices have zero curvature.
SurfaceMesh flatHatControl(double boundarySide = 1.0);

/// The base triangle used for the local frame of acuteHat().
Triangle3 standardBaseTriangle(double side = 1.0);

/// True iff every vertex of the hat lies in the closed right prism over `base`
/// on its outward side. Throws BoundaryMismatch if `hat` is not a disk bounded
/// by exactly three vertices.
bool prismContainmentCheck(const SurfaceMesh& hat, const Triangle3& base);

// ---------------------------------------------------------------------------
// Stacked hats

/// One tetrahedron glued onto an oriented face; `apex` must lie strictly on
/// the outward side of the face at the time of gluing.
struct Gluing {
  Face face;
  VertexId apex;
  double clearance = 0;  // signed distance of apex from the face plane
};

/// Replayable proof that a surface is a stacked polyhedron (or, for a lone
/// hat, a stacking over its boundary triangle).
struct StackingCertificate {
  std::vector<Face> root;
  std::vector<Gluing> gluings;
};

/// Replays the certificate against `mesh`: each gluing must target a face of
/// the current surface, introduce a fresh apex on the face's outward side, and
/// the final face set must equal the mesh's.
bool validateCertificate(const SurfaceMesh& mesh, const StackingCertificate& certificate);

struct StackedHatSpec {
  Triangle3 boundary = standardBaseTriangle(1.0);
  double interfaceSide = 0.25;
  std::array<double, 3> stackHeights{0.01, 0.012, 0.014};
  /// Altitude of each isosceles crown face over its interface edge.
  double crownHeight = 0.25 / (2.0 * std::tan(degToRad(10.0)));

  /// The crown must be sharper than the isosceles triangle inscribed in a
  /// regular pentagon (apex 36 degrees).
  double minimumCrownHeight() const { return interfaceSide / (2.0 * std::tan(degToRad(18.0))); }
};

struct StackedHat {
  SurfaceMesh mesh;
  StackingCertificate certificate;
};

/// Builds the stacked hat by four successive splits:
/// v1 splits (B1,B2,B3); v2 splits (B3,B1,v1); v3 splits (B1,v1,v2);
/// v4 splits (v1,v2,v3). Vertex ids: 0..2 = B1..B3, 3..6 = v1..v4.
StackedHat stackedHat(const StackedHatSpec& spec = {});

/// Spec for a stacked hat over an arbitrary base triangle, scaled from the
/// unit defaults by the ratio of inradii, and further by (smallest corner
/// angle / 60 degrees) when the triangle is not equilateral.
StackedHatSpec scaledStackedHatSpec(const Triangle3& boundary);

// ---------------------------------------------------------------------------
// Polyhedra

/// Regular tetrahedron with unit edges, faces oriented outward.
SurfaceMesh regularTetrahedron();

struct FamilyMesh {
  SurfaceMesh mesh;
  std::size_t baseFaceCount = 0;
  std::size_t baseVertexCount = 0;
  /// Base triangle under hat i (hat id == index).
  std::vector<Triangle3> baseTriangles;
  std::optional<StackingCertificate> certificate;
};

/// Regular tetrahedron with every face replaced by an outward acute hat.
SurfaceMesh caltrop();

/// Each tetrahedron face split into k^2 equilateral triangles of side 1/k,
/// every one of them replaced by an outward acute hat.
FamilyMesh subdividedCaltrop(int k);

/// k shallow in-center stackings of a regular tetrahedron (always refining
/// face 0), then every base face replaced by an outward stacked hat.
FamilyMesh stackedFamily(int k);

}  // namespace ununfold
