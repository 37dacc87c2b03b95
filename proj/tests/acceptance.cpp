// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "ununfold/constructions.hpp"
#include "ununfold/io.hpp"
#include "ununfold/predicates.hpp"
#include "ununfold/verify.hpp"

using namespace ununfold;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

Outcome curvature() {
  const CurvatureReport r = curvatureReport(acuteHat().mesh);
  double worst = 0;
  for (VertexId n : {3u, 4u, 5u}) worst = std::max(worst, std::abs(r.vertices[n].angleSum - 425.0));
  worst = std::max(worst, std::abs(r.vertices[6].angleSum - 30.0));
  return {worst < 1e-6, "max angle-sum error " + fmt(worst) + " deg"};
}

Outcome embedding() {
  const SurfaceMesh m = acuteHat().mesh;
  const double leg = oracle::acuteLeg(1.0), inner = oracle::acuteInner(1.0);
  double worst = 0;
  for (const Edge& e : m.edges()) {
    double expected = leg;
    if (e.v1 <= 2) expected = 1.0;
    if (e.v0 >= 3 && e.v1 <= 5) expected = inner;
    worst = std::max(worst, std::abs(distance(m.vertex(e.v0), m.vertex(e.v1)) - expected) / expected);
  }
  const bool prism = prismContainmentCheck(m, standardBaseTriangle(1.0));
  return {m.edgeCount() == 15 && worst < 1e-9 && prism,
          "15 edges, max relative error " + fmt(worst) + ", prism " + (prism ? "ok" : "violated")};
}

Outcome chainAngle() {
  const SurfaceMesh hat = acuteHat().mesh;
  const std::vector<FaceId> ring{0, 1, 2, 3, 4, 5};
  double worst = 0;
  for (const auto& path : {std::vector<VertexId>{0, 4, 3, 5}, std::vector<VertexId>{0, 4, 5, 3}}) {
    CutSet cuts(hat);
    cuts.cut(*hat.findEdge(path[0], path[1]));
    for (auto [u, w] : {std::pair<VertexId, VertexId>{3, 4}, {4, 5}, {5, 3}}) cuts.cut(*hat.findEdge(u, w));
    const DevelopedPiece strip = developPiece(hat, cuts, ring);
    auto image = [&](VertexId u, VertexId w, VertexId v) {
      for (std::size_t k = 0; k < strip.plan.size(); ++k) {
        const Face& fv = hat.face(strip.plan[k].face);
        if (std::count(fv.begin(), fv.end(), u) && std::count(fv.begin(), fv.end(), w)) {
          return strip.triangles[k][static_cast<std::size_t>(hat.cornerOf(strip.plan[k].face, v))];
        }
      }
      return Point2{NAN, NAN};
    };
    const std::vector<VertexId> chain{path[1], path[2], path[3], path[1]};
    for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
      const VertexId p = chain[j - 1], q = chain[j], r = chain[j + 1];
      const Point2 pi = image(p, q, p), qi = image(p, q, q), ri = image(q, r, r);
      double deg = std::abs(radToDeg(std::atan2(pi.y - qi.y, pi.x - qi.x) - std::atan2(ri.y - qi.y, ri.x - qi.x)));
      if (deg > 180) deg = 360 - deg;
      worst = std::max(worst, std::isnan(deg) ? 1e9 : std::abs(deg - 105.0));
    }
  }
  return {worst < 1e-6, "both paths, both joints; max deviation from 105 deg " + fmt(worst)};
}

Outcome census() {
  const SurfaceMesh hat = acuteHat().mesh;
  const Lemma3Census c = enumerateLemma3Paths(hat);
  const CurvatureReport curv = curvatureReport(hat);
  std::vector<EdgeId> interior;
  for (EdgeId e = 0; e < hat.edgeCount(); ++e) {
    if (!hat.edge(e).isBoundary()) interior.push_back(e);
  }
  std::size_t compatible = 0, agree = 0;
  for (unsigned mask = 0; mask < (1u << interior.size()); ++mask) {
    CutSet cuts(hat);
    for (std::size_t i = 0; i < interior.size(); ++i) {
      if (mask & (1u << i)) cuts.cut(interior[i]);
    }
    bool twoAtNegatives = true;
    for (VertexId v = 0; v < hat.vertexCount(); ++v) {
      if (curv.vertices[v].boundary || curv.vertices[v].deficit >= 0) continue;
      int degree = 0;
      for (EdgeId e : cuts.edges()) degree += hat.edge(e).hasVertex(v) ? 1 : 0;
      twoAtNegatives = twoAtNegatives && degree >= 2;
    }
    const bool ok = oracle::pieceCountBfs(hat, cuts) == 1 && twoAtNegatives &&
                    classifyCutsInDisk(hat, cuts).kind == CutClass::ForestOnePerTree;
    compatible += ok ? 1 : 0;
    agree += ok == lemma3Filter(hat, cuts) ? 1 : 0;
  }
  const bool pass = c.classCount == 2 && interior.size() == 12 && agree == 4096 && compatible == c.paths.size();
  return {pass, std::to_string(c.classCount) + " classes, " + std::to_string(c.paths.size()) + " paths, " +
                    std::to_string(compatible) + " compatible of 4096 subsets, filter agrees on " +
                    std::to_string(agree)};
}

Outcome certificates() {
  bool pass = true;
  std::string detail;
  for (const auto& [name, mesh] : {std::pair<std::string, SurfaceMesh>{"acute", acuteHat().mesh},
                                   {"stacked", stackedHat().mesh}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport r = verifyHatNoSinglePiece(mesh);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool oracleOk = static_cast<long long>(r.enumerationSize) == oracle::kirchhoffDouble(mesh) &&
                          r.enumerationSize == r.matrixTreeCount;
    bool everyTree = true;
    for (const TreeOutcome& t : r.outcomes) everyTree = everyTree && t.decisivePairs > 0;
    pass = pass && r.conclusion && r.certified && oracleOk && everyTree && secs < 60;
    detail += name + ": " + std::to_string(r.enumerationSize) + " trees, " +
              (r.conclusion && r.certified ? "certified" : "NOT certified") + ", " + fmt(secs) + " s; ";
  }
  return {pass, detail};
}

Outcome control() {
  const SurfaceMesh flat = flatHatControl();
  const VerificationReport r = verifyHatNoSinglePiece(flat);
  const bool witnessFlat = r.witness && r.witness->faces.size() == 9 &&
                           pieceOverlapReport(flat, *r.witness, Precision::Interval).empty();
  return {!r.conclusion && witnessFlat,
          std::string("conclusion ") + (r.conclusion ? "true" : "false") + ", witness tree " +
              (r.witnessTree ? std::to_string(*r.witnessTree) : "none")};
}

Outcome counting() {
  bool pass = true;
  for (int k = 1; k <= 4; ++k) pass = pass && theoremLowerBound(FamilyVariant::AcuteSubdivided, k) == std::size_t(2 * k * k);
  for (int k = 0; k <= 3; ++k) pass = pass && theoremLowerBound(FamilyVariant::StackedFamily, k) == std::size_t(k + 2);
  const std::array<std::array<VertexId, 3>, 4> faces{{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}};
  std::size_t best = SIZE_MAX;
  for (int code = 0; code < 81; ++code) {
    std::vector<std::pair<VertexId, VertexId>> paths;
    int c = code;
    for (const auto& f : faces) {
      paths.emplace_back(f[(c % 3 + 1) % 3], f[(c % 3 + 2) % 3]);
      c /= 3;
    }
    std::array<int, 4> order{0, 1, 2, 3};
    do {
      PathSystem ps;
      ps.baseVertexCount = 4;
      for (int i : order) ps.terminals.push_back(paths[static_cast<std::size_t>(i)]);
      best = std::min(best, minPiecesOfPathSystem(ps));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return {pass && best == 2, "closed forms ok: " + std::string(pass ? "yes" : "no") + ", brute-force minimum " +
                                 std::to_string(best)};
}

Outcome families() {
  bool pass = true;
  for (int k = 1; k <= 4; ++k) {
    const FamilyMesh fm = subdividedCaltrop(k);
    pass = pass && fm.baseFaceCount == std::size_t(4 * k * k) && fm.baseVertexCount == std::size_t(2 * k * k + 2);
  }
  for (int k = 0; k <= 5; ++k) {
    const FamilyMesh fm = stackedFamily(k);
    pass = pass && fm.baseFaceCount == std::size_t(4 + 2 * k) && fm.baseVertexCount == std::size_t(4 + k) &&
           fm.certificate && validateCertificate(fm.mesh, *fm.certificate);
  }
  return {pass, "subdivided k<=4, stacked k<=5 with certificates"};
}

Outcome pentagon() {
  const PentagonMargin a = pentagonMargin(105.0), b = pentagonMargin(111.0), c = pentagonMargin(108.0);
  const bool pass = a.crossesBisector() == Sign::Positive && a.crossesCloserThanPentagon() &&
                    b.crossesBisector() == Sign::Negative && !b.crossesCloserThanPentagon() && c.boundaryCoincident();
  return {pass, "105 holds, 111 fails, 108 coincident"};
}

Outcome roundTrip() {
  bool pass = true;
  for (const SurfaceMesh& m : {acuteHat().mesh, stackedHat().mesh, flatHatControl(), regularTetrahedron(), caltrop(),
                               subdividedCaltrop(2).mesh, stackedFamily(3).mesh}) {
    const SurfaceMesh back = parseMesh(meshToString(m));
    pass = pass && back.vertexCount() == m.vertexCount() &&
           std::memcmp(back.vertices().data(), m.vertices().data(), m.vertexCount() * sizeof(Point3)) == 0 &&
           std::equal(m.faces().begin(), m.faces().end(), back.faces().begin(), back.faces().end()) &&
           std::equal(m.labels().begin(), m.labels().end(), back.labels().begin(), back.labels().end());
  }
  const auto dir = std::filesystem::temp_directory_path() / "ununfold_acceptance";
  std::filesystem::create_directories(dir);
  const std::string mesh = (dir / "acute_hat.obj").string();
  const std::string r1 = (dir / "r1.json").string(), r2 = (dir / "r2.json").string();
  std::ostringstream sink;
  auto call = [&](std::vector<const char*> argv) { return cli::run(static_cast<int>(argv.size()), argv.data(), sink, sink); };
  bool cliOk = call({"ununfold", "generate", "acute-hat", "--out", mesh.c_str()}) == cli::kExitOk;
  cliOk = cliOk && call({"ununfold", "verify-hat", mesh.c_str(), "--report", r1.c_str()}) == cli::kExitOk;
  cliOk = cliOk && call({"ununfold", "verify-hat", mesh.c_str(), "--report", r2.c_str(), "--jobs", "4"}) == cli::kExitOk;
  const bool same = cliOk && readTextFile(r1) == readTextFile(r2);
  std::filesystem::remove_all(dir);
  return {pass && same, std::string("bit-identical round trips ") + (pass ? "yes" : "no") +
                            ", verify-hat reports identical " + (same ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>, double>> criteria{
      {1, "curvature reproduction", curvature, 1.0},
      {2, "embedding fidelity", embedding, 0},
      {3, "chain angle", chainAngle, 0},
      {4, "path census", census, 10.0},
      {5, "impossibility certificates", certificates, 120.0},
      {6, "control soundness", control, 0},
      {7, "counting theorems", counting, 0},
      {8, "family generators", families, 0},
      {9, "pentagon margin", pentagon, 0},
      {10, "round trip and determinism", roundTrip, 0},
  };
  int failed = 0;
  for (const auto& [id, name, fn, limit] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
      o.pass = false;
      o.detail += " (over the " + fmt(limit) + " s budget)";
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << name << "): " << o.detail << "  ["
              << fmt(secs) << " s]\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
