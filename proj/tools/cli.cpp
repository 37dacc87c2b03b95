#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "ununfold/audit.hpp"
#include "ununfold/constructions.hpp"
#include "ununfold/error.hpp"
#include "ununfold/io.hpp"
#include "ununfold/verify.hpp"

namespace ununfold::cli {

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

/// Raised for argument values CLI11 cannot validate on its own.
struct UsageError {
  std::string message;
};

Precision resolvePrecision(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    const char* env = std::getenv("UNUNFOLD_PRECISION");
    text = env && *env ? env : "interval";
  }
  const auto p = parsePrecision(text);
  if (!p) throw UsageError{"unknown precision mode '" + text + "' (expected float or interval)"};
  return *p;
}

SurfaceMesh generate(const std::string& kind, int k) {
  if (kind == "acute-hat") return acuteHat().mesh;
  if (kind == "stacked-hat") return stackedHat().mesh;
  if (kind == "caltrop") return caltrop();
  if (kind == "subdivided") return subdividedCaltrop(k).mesh;
  if (kind == "stacked") return stackedFamily(k).mesh;
  if (kind == "flat-control") return flatHatControl();
  if (kind == "tetrahedron") return regularTetrahedron();
  throw UsageError{"unknown mesh kind '" + kind + "'"};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, unfold and verify edge-ununfoldable polyhedra", "ununfold"};
  app.require_subcommand(1);

  // generate
  std::string genKind, genOut;
  int genK = 1;
  bool genKGiven = false;
  auto* gen = app.add_subcommand("generate", "Write a construction to a mesh file");
  gen->add_option("kind", genKind, "acute-hat | stacked-hat | caltrop | subdivided | stacked | flat-control | tetrahedron")
      ->required()
      ->check(CLI::IsMember({"acute-hat", "stacked-hat", "caltrop", "subdivided", "stacked", "flat-control",
                             "tetrahedron"}));
  gen->add_option("--k", genK, "Family parameter for subdivided/stacked")->each([&](const std::string&) {
    genKGiven = true;
  });
  gen->add_option("--out", genOut, "Output mesh file")->required();

  // curvature
  std::string curvFile;
  auto* curv = app.add_subcommand("curvature", "Print angle sums and deficits per vertex");
  curv->add_option("mesh", curvFile, "Mesh file")->required();

  // unfold
  std::string unfFile, unfCuts, unfSvg;
  double unfGap = SvgOptions{}.gap, unfScale = SvgOptions{}.scale;
  auto* unf = app.add_subcommand("unfold", "Develop the pieces of a cut surface and draw the net");
  unf->add_option("mesh", unfFile, "Mesh file")->required();
  unf->add_option("--cuts", unfCuts, "Cut file with `u v` lines")->required();
  unf->add_option("--svg", unfSvg, "SVG output file")->required();
  unf->add_option("--gap", unfGap, "Gap between pieces in model units");
  unf->add_option("--scale", unfScale, "Pixels per model unit");

  // verify-hat
  std::string verFile, verMode, verReport;
  unsigned verJobs = 1;
  bool verTiming = false;
  auto* ver = app.add_subcommand("verify-hat", "Check every single-piece development of a hat for overlap");
  ver->add_option("mesh", verFile, "Hat mesh file")->required();
  ver->add_option("--mode", verMode, "float | interval (default: $UNUNFOLD_PRECISION or interval)");
  ver->add_option("--report", verReport, "JSON report output file");
  ver->add_option("--jobs", verJobs, "Worker threads")->check(CLI::Range(1u, 256u));
  ver->add_flag("--timing", verTiming, "Include wall time in the report");

  // enumerate-paths
  std::string pathFile, pathJson;
  auto* paths = app.add_subcommand("enumerate-paths", "List the boundary-to-center cut paths of a hat");
  paths->add_option("mesh", pathFile, "Hat mesh file")->required();
  paths->add_option("--json", pathJson, "Write the census as JSON");

  // lower-bound
  std::string lbVariant;
  int lbK = 0;
  auto* lb = app.add_subcommand("lower-bound", "Print the piece lower bound of a family");
  lb->add_option("variant", lbVariant, "subdivided | stacked")
      ->required()
      ->check(CLI::IsMember({"subdivided", "stacked"}));
  lb->add_option("--k", lbK, "Family parameter")->required();

  // audit
  std::string audFile, audCuts, audMode, audReport, audSvg;
  auto* aud = app.add_subcommand("audit", "Classify a cut set hat by hat and check its pieces");
  aud->add_option("mesh", audFile, "Mesh file")->required();
  aud->add_option("--cuts", audCuts, "Cut file with `u v` lines")->required();
  aud->add_option("--mode", audMode, "float | interval (default: $UNUNFOLD_PRECISION or interval)");
  aud->add_option("--report", audReport, "JSON report output file (default: standard output)");
  aud->add_option("--svg", audSvg, "Also draw the pieces");

  // search
  std::string seaFile, seaOut;
  SearchOptions seaOpts;
  auto* sea = app.add_subcommand("search", "Randomized greedy search for a non-overlapping multi-piece unfolding");
  sea->add_option("mesh", seaFile, "Mesh file")->required();
  sea->add_option("--seed", seaOpts.seed, "Random seed");
  sea->add_option("--restarts", seaOpts.restarts, "Number of greedy restarts");
  sea->add_option("--out-cuts", seaOut, "Write the best cut set found");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      if ((genKind == "subdivided" || genKind == "stacked") && !genKGiven) {
        throw UsageError{"generate " + genKind + " requires --k"};
      }
      const SurfaceMesh mesh = generate(genKind, genK);
      exportMesh(mesh, genOut);
      out << "wrote " << genOut << ": " << mesh.vertexCount() << " vertices, " << mesh.faceCount() << " faces\n";
      return kExitOk;
    }
    if (*curv) {
      const SurfaceMesh mesh = importMesh(curvFile);
      const CurvatureReport report = curvatureReport(mesh);
      for (VertexId v = 0; v < mesh.vertexCount(); ++v) {
        const VertexCurvature& c = report.vertices[v];
        out << "v" << (v + 1) << " " << (c.boundary ? "boundary" : "interior") << " angle_sum " << fixed(c.angleSum)
            << " deficit " << fixed(c.deficit) << "\n";
      }
      out << "negative " << report.countNegative() << " positive " << report.countPositive() << " total_deficit "
          << fixed(report.totalDeficit()) << "\n";
      return kExitOk;
    }
    if (*unf) {
      const SurfaceMesh mesh = importMesh(unfFile);
      const CutSet cuts = readCutFile(mesh, unfCuts);
      const Unfolding unfolding = develop(mesh, cuts);
      SvgOptions options;
      options.gap = unfGap;
      options.scale = unfScale;
      exportSvg(mesh, cuts, unfolding, unfSvg, options);
      std::size_t overlaps = 0;
      for (const DevelopedPiece& p : unfolding.pieces) overlaps += pieceOverlapReport(mesh, p, Precision::Float).pairs.size();
      out << "pieces " << unfolding.pieces.size() << " overlap_pairs " << overlaps << "\n";
      return kExitOk;
    }
    if (*ver) {
      const SurfaceMesh mesh = importMesh(verFile);
      VerifyOptions options;
      options.mode = resolvePrecision(verMode);
      options.jobs = verJobs;
      options.meshId = std::filesystem::path(verFile).filename().string();
      const VerificationReport report = verifyHatNoSinglePiece(mesh, options);
      const std::string json = verificationReportJson(report, verTiming);
      if (!verReport.empty()) writeTextFile(verReport, json);
      out << "trees " << report.enumerationSize << " mode " << toString(report.mode) << " conclusion "
          << (report.conclusion ? "true" : "false") << (report.certified ? " (certified)" : "") << "\n";
      return report.conclusion ? kExitOk : kExitConclusionFalse;
    }
    if (*paths) {
      const SurfaceMesh mesh = importMesh(pathFile);
      const Lemma3Census census = enumerateLemma3Paths(mesh);
      for (const Lemma3Path& p : census.paths) {
        out << "class " << p.symmetryClass << ":";
        for (VertexId v : p.vertices) out << " " << (v + 1);
        out << "\n";
      }
      out << "paths " << census.paths.size() << " classes " << census.classCount << " automorphisms "
          << census.automorphismCount << "\n";
      if (!pathJson.empty()) writeTextFile(pathJson, lemma3CensusJson(census));
      return kExitOk;
    }
    if (*lb) {
      const auto variant = lbVariant == "subdivided" ? FamilyVariant::AcuteSubdivided : FamilyVariant::StackedFamily;
      out << theoremLowerBound(variant, lbK) << "\n";
      return kExitOk;
    }
    if (*aud) {
      const SurfaceMesh mesh = importMesh(audFile);
      const CutSet cuts = readCutFile(mesh, audCuts);
      const AuditReport report = auditCutSet(mesh, cuts, resolvePrecision(audMode));
      const std::string json = auditReportJson(report);
      if (audReport.empty()) {
        out << json;
      } else {
        writeTextFile(audReport, json);
        out << "pieces " << report.pieces.size() << " valid " << (report.validUnfolding ? "true" : "false") << "\n";
      }
      if (!audSvg.empty()) {
        Unfolding unfolding;
        for (const PieceAudit& p : report.pieces) {
          if (p.development) unfolding.pieces.push_back(*p.development);
        }
        exportSvg(mesh, cuts, unfolding, audSvg);
      }
      return kExitOk;
    }
    if (*sea) {
      const SurfaceMesh mesh = importMesh(seaFile);
      const SearchResult result = randomizedUnfoldingSearch(mesh, seaOpts);
      out << "seed " << seaOpts.seed << " restarts " << result.restarts << " trials " << result.trials
          << " best_pieces " << result.bestPieces << "\n";
      if (!seaOut.empty() && result.best) writeCutFile(mesh, *result.best, seaOut);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << toString(e.code()) << "]: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace ununfold::cli
