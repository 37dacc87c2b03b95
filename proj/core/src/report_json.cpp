#include <json.hpp>

#include <string>

#include "ununfold/io.hpp"

namespace ununfold {

namespace {

using Json = nlohmann::ordered_json;

Json developmentJson(const DevelopedPiece& piece) {
  Json faces = Json::array();
  for (std::size_t k = 0; k < piece.plan.size(); ++k) {
    Json corners = Json::array();
    for (const Point2& p : piece.triangles[k]) corners.push_back({p.x, p.y});
    faces.push_back({{"face", piece.plan[k].face},
                     {"parent", piece.plan[k].parent == kNoFace ? Json(nullptr) : Json(piece.plan[k].parent)},
                     {"corners", corners}});
  }
  return faces;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool fail(std::string* error, const std::string& what) {
  if (error) *error = what;
  return false;
}

using Check = bool (Json::*)() const noexcept;

bool require(const Json& j, const char* key, Check check, std::string* error, const std::string& where) {
  if (!j.contains(key)) return fail(error, where + ": missing '" + key + "'");
  if (!(j.at(key).*check)()) return fail(error, where + ": '" + key + "' has the wrong type");
  return true;
}

}  // namespace

std::string verificationReportJson(const VerificationReport& report, bool includeTiming) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "verification";
  j["mesh_id"] = report.meshId;
  j["mode"] = std::string(toString(report.mode));
  j["enumeration_size"] = report.enumerationSize;
  j["matrix_tree_count"] = report.matrixTreeCount;
  j["signature_ok"] = report.signatureOk;
  j["lemma3"] = {{"paths", report.lemma3PathCount},
                 {"symmetry_classes", report.lemma3SymmetryClasses},
                 {"trees", report.lemma3Trees}};
  j["conclusion"] = report.conclusion;
  j["certified"] = report.certified;
  j["witness_tree"] = report.witnessTree ? Json(*report.witnessTree) : Json(nullptr);
  j["witness"] = report.witness ? developmentJson(*report.witness) : Json(nullptr);
  Json outcomes = Json::array();
  for (const TreeOutcome& o : report.outcomes) {
    outcomes.push_back({{"tree", o.treeId},
                        {"cut_edges", o.cutEdges},
                        {"overlap_pairs", o.overlapPairs},
                        {"decisive_pairs", o.decisivePairs},
                        {"crown_overlap_pairs", o.crownOverlapPairs},
                        {"escalated_pairs", o.escalatedPairs},
                        {"uncertified_touches", o.uncertifiedTouches},
                        {"lemma3_path", o.lemma3Path}});
  }
  j["outcomes"] = std::move(outcomes);
  if (includeTiming) j["wall_time_ms"] = report.wallTimeMs;
  return dump(j);
}

std::string auditReportJson(const AuditReport& report) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "audit";
  j["mode"] = std::string(toString(report.mode));
  j["piece_count"] = report.pieces.size();
  j["valid_unfolding"] = report.validUnfolding;
  j["lower_bound"] = report.lowerBound ? Json(*report.lowerBound) : Json(nullptr);
  j["respects_lower_bound"] = report.respectsLowerBound ? Json(*report.respectsLowerBound) : Json(nullptr);
  Json hats = Json::array();
  for (const HatAudit& h : report.hats) {
    hats.push_back({{"hat", h.hatId},
                    {"class", std::string(toString(h.cutClass))},
                    {"interior_cuts", h.interiorCuts},
                    {"lemma3_path", h.lemma3Path ? Json(*h.lemma3Path) : Json(nullptr)}});
  }
  j["hats"] = std::move(hats);
  Json pieces = Json::array();
  for (const PieceAudit& p : report.pieces) {
    pieces.push_back({{"faces", p.faces},
                      {"developable", p.developable},
                      {"failure", p.failure},
                      {"overlap_pairs", p.overlapPairs}});
  }
  j["pieces"] = std::move(pieces);
  return dump(j);
}

std::string lemma3CensusJson(const Lemma3Census& census) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "lemma3-paths";
  j["automorphisms"] = census.automorphismCount;
  j["symmetry_classes"] = census.classCount;
  Json paths = Json::array();
  for (const Lemma3Path& p : census.paths) {
    paths.push_back({{"vertices", p.vertices}, {"edges", p.edges}, {"class", p.symmetryClass}});
  }
  j["paths"] = std::move(paths);
  return dump(j);
}

bool validateReportJson(std::string_view text, std::string* error) {
  const Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return fail(error, "not a JSON object");
  if (!require(j, "schema_version", &Json::is_number_integer, error, "report")) return false;
  if (j["schema_version"] != kReportSchemaVersion) return fail(error, "unsupported schema_version");
  if (!require(j, "kind", &Json::is_string, error, "report")) return false;
  const std::string kind = j["kind"];
  if (kind == "verification") {
    for (const char* key : {"enumeration_size", "matrix_tree_count"}) {
      if (!require(j, key, &Json::is_number_unsigned, error, "report")) return false;
    }
    for (const char* key : {"signature_ok", "conclusion", "certified"}) {
      if (!require(j, key, &Json::is_boolean, error, "report")) return false;
    }
    if (!require(j, "mode", &Json::is_string, error, "report")) return false;
    if (!require(j, "lemma3", &Json::is_object, error, "report")) return false;
    if (!require(j, "outcomes", &Json::is_array, error, "report")) return false;
    if (j["outcomes"].size() != j["enumeration_size"].get<std::size_t>()) {
      return fail(error, "report: outcome count differs from enumeration_size");
    }
    for (const Json& o : j["outcomes"]) {
      for (const char* key : {"tree", "overlap_pairs", "decisive_pairs", "crown_overlap_pairs"}) {
        if (!require(o, key, &Json::is_number_unsigned, error, "outcome")) return false;
      }
      if (!require(o, "cut_edges", &Json::is_array, error, "outcome")) return false;
      if (!require(o, "lemma3_path", &Json::is_boolean, error, "outcome")) return false;
    }
    return true;
  }
  if (kind == "audit") {
    if (!require(j, "piece_count", &Json::is_number_unsigned, error, "report")) return false;
    if (!require(j, "valid_unfolding", &Json::is_boolean, error, "report")) return false;
    if (!require(j, "hats", &Json::is_array, error, "report")) return false;
    if (!require(j, "pieces", &Json::is_array, error, "report")) return false;
    if (j["pieces"].size() != j["piece_count"].get<std::size_t>()) {
      return fail(error, "report: piece list differs from piece_count");
    }
    return true;
  }
  if (kind == "lemma3-paths") {
    if (!require(j, "symmetry_classes", &Json::is_number_unsigned, error, "report")) return false;
    return require(j, "paths", &Json::is_array, error, "report");
  }
  return fail(error, "unknown report kind '" + kind + "'");
}

}  // namespace ununfold
