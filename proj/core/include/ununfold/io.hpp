#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ununfold/audit.hpp"
#include "ununfold/mesh.hpp"
#include "ununfold/unfold.hpp"
#include "ununfold/verify.hpp"

namespace ununfold {

// ---------------------------------------------------------------------------
// Mesh text format: `v x y z`, `f i j k` (1-indexed), plus comment lines
// `# region <face, 1-indexed> <label> <hatId>` and `# family <variant> <k>`.
// Coordinates are written in shortest round-trip form, so import(export(m))
// reproduces every coordinate bit for bit.

std::string meshToString(const SurfaceMesh& mesh);
/// Throws ParseError (with line and column) or the mesh validation errors.
SurfaceMesh parseMesh(std::string_view text);

/// Throws IoError.
void exportMesh(const SurfaceMesh& mesh, const std::filesystem::path& path);
SurfaceMesh importMesh(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Cut files: one edge per line as `u v`, 1-indexed vertex ids; `#` comments.

std::string cutsToString(const SurfaceMesh& mesh, const CutSet& cuts);
/// Throws ParseError for malformed lines and InvalidCutSet for non-edges.
CutSet parseCuts(const SurfaceMesh& mesh, std::string_view text);
void writeCutFile(const SurfaceMesh& mesh, const CutSet& cuts, const std::filesystem::path& path);
CutSet readCutFile(const SurfaceMesh& mesh, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// SVG nets

struct SvgOptions {
  /// Pixels per model unit.
  double scale = 400.0;
  /// Space between grid cells, in model units.
  double gap = 0.25;
  /// Page margin in pixels.
  double margin = 20.0;
  /// Grid columns; 0 picks ceil(sqrt(piece count)).
  std::size_t columns = 0;
};

/// Where each piece went: SVG point = scale * (development point + offset) + margin.
struct SvgLayout {
  double scale = 0;
  double margin = 0;
  std::vector<Point2> offsets;
  double width = 0;
  double height = 0;
};

/// One polygon per face, filled by region; faces in an overlapping pair are
/// stroked red, cut and boundary edges are dashed, folds are solid.
std::string renderSvg(const SurfaceMesh& mesh, const CutSet& cuts, const Unfolding& unfolding,
                      const SvgOptions& options = {}, SvgLayout* layout = nullptr);
void exportSvg(const SurfaceMesh& mesh, const CutSet& cuts, const Unfolding& unfolding,
               const std::filesystem::path& path, const SvgOptions& options = {});

// ---------------------------------------------------------------------------
// JSON reports (keys in fixed order, schema_version first)

inline constexpr int kReportSchemaVersion = 1;

/// Wall time is included only when requested, so reports are reproducible.
std::string verificationReportJson(const VerificationReport& report, bool includeTiming = false);
std::string auditReportJson(const AuditReport& report);
std::string lemma3CensusJson(const Lemma3Census& census);

/// Structural validation of a report produced above; on failure returns
/// false and describes the first problem in `error`.
bool validateReportJson(std::string_view text, std::string* error = nullptr);

/// Writes text to a file; throws IoError.
void writeTextFile(const std::filesystem::path& path, std::string_view text);
std::string readTextFile(const std::filesystem::path& path);

}  // namespace ununfold
