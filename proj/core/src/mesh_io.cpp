#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "ununfold/error.hpp"
#include "ununfold/io.hpp"

namespace ununfold {

namespace {

void appendDouble(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void parseError(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

double parseDouble(const Token& t, std::size_t line) {
  double v = 0;
  const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
    parseError(line, t.column, "expected a number, found '" + std::string(t.text) + "'");
  }
  return v;
}

long long parseInteger(std::string_view text, std::size_t column, std::size_t line) {
  long long v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    parseError(line, column, "expected an integer, found '" + std::string(text) + "'");
  }
  return v;
}

/// Index in a 1-indexed list; `f` entries may carry OBJ `/vt/vn` suffixes.
std::uint32_t parseIndex(const Token& t, std::size_t line) {
  const std::string_view head = t.text.substr(0, t.text.find('/'));
  const long long v = parseInteger(head, t.column, line);
  if (v < 1 || v > static_cast<long long>(std::numeric_limits<std::uint32_t>::max())) {
    parseError(line, t.column, "index must be a positive 1-based integer");
  }
  return static_cast<std::uint32_t>(v - 1);
}

template <class Fn>
void forEachLine(std::string_view text, Fn&& fn) {
  std::size_t lineNo = 0, pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++lineNo;
    fn(lineNo, text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

std::string meshToString(const SurfaceMesh& mesh) {
  std::string out = "# ununfold mesh: " + std::to_string(mesh.vertexCount()) + " vertices, " +
                    std::to_string(mesh.faceCount()) + " faces\n";
  if (const auto family = mesh.family()) {
    out += "# family " + std::string(toString(family->variant)) + " " + std::to_string(family->k) + "\n";
  }
  for (const Point3& p : mesh.vertices()) {
    out += "v ";
    appendDouble(out, p.x);
    out += ' ';
    appendDouble(out, p.y);
    out += ' ';
    appendDouble(out, p.z);
    out += '\n';
  }
  for (const Face& f : mesh.faces()) {
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " + std::to_string(f[2] + 1) + "\n";
  }
  for (FaceId f = 0; f < mesh.faceCount(); ++f) {
    const FaceLabel& l = mesh.label(f);
    out += "# region " + std::to_string(f + 1) + " " + std::string(toString(l.region)) + " " +
           std::to_string(l.hatId) + "\n";
  }
  return out;
}

SurfaceMesh parseMesh(std::string_view text) {
  std::vector<Point3> vertices;
  std::vector<Face> faces;
  struct RegionLine {
    std::size_t line, column;
    std::uint32_t face;
    FaceLabel label;
  };
  std::vector<RegionLine> regions;
  std::optional<FamilyTag> family;

  forEachLine(text, [&](std::size_t lineNo, std::string_view line) {
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) return;
    const std::string_view key = tokens[0].text;
    if (key[0] == '#') {
      if (key != "#" || tokens.size() < 2) return;
      if (tokens[1].text == "region") {
        if (tokens.size() != 5) parseError(lineNo, tokens[0].column, "region line needs <face> <label> <hatId>");
        const auto label = parseRegionLabel(tokens[3].text);
        if (!label) parseError(lineNo, tokens[3].column, "unknown region label '" + std::string(tokens[3].text) + "'");
        const long long hat = parseInteger(tokens[4].text, tokens[4].column, lineNo);
        regions.push_back({lineNo, tokens[2].column, parseIndex(tokens[2], lineNo), {*label, static_cast<int>(hat)}});
      } else if (tokens[1].text == "family") {
        if (tokens.size() != 4) parseError(lineNo, tokens[0].column, "family line needs <variant> <k>");
        FamilyTag tag{};
        if (tokens[2].text == "subdivided") {
          tag.variant = FamilyVariant::AcuteSubdivided;
        } else if (tokens[2].text == "stacked") {
          tag.variant = FamilyVariant::StackedFamily;
        } else {
          parseError(lineNo, tokens[2].column, "unknown family '" + std::string(tokens[2].text) + "'");
        }
        tag.k = static_cast<int>(parseInteger(tokens[3].text, tokens[3].column, lineNo));
        family = tag;
      }
      return;
    }
    if (key == "v") {
      if (tokens.size() != 4) parseError(lineNo, tokens[0].column, "vertex line needs exactly 3 coordinates");
      vertices.push_back({parseDouble(tokens[1], lineNo), parseDouble(tokens[2], lineNo), parseDouble(tokens[3], lineNo)});
    } else if (key == "f") {
      if (tokens.size() != 4) {
        parseError(lineNo, tokens[0].column,
                   "face line needs exactly 3 vertices, found " + std::to_string(tokens.size() - 1));
      }
      faces.push_back({parseIndex(tokens[1], lineNo), parseIndex(tokens[2], lineNo), parseIndex(tokens[3], lineNo)});
    } else if (key == "vn" || key == "vt" || key == "o" || key == "g" || key == "s" || key == "mtllib" ||
               key == "usemtl") {
      return;
    } else {
      parseError(lineNo, tokens[0].column, "unknown statement '" + std::string(key) + "'");
    }
  });

  std::vector<FaceLabel> labels(faces.size());
  for (const RegionLine& r : regions) {
    if (r.face >= faces.size()) parseError(r.line, r.column, "region refers to a missing face");
    labels[r.face] = r.label;
  }
  SurfaceMesh mesh = buildMesh(std::move(vertices), std::move(faces), std::move(labels));
  mesh.setFamily(family);
  return mesh;
}

void writeTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void exportMesh(const SurfaceMesh& mesh, const std::filesystem::path& path) { writeTextFile(path, meshToString(mesh)); }

SurfaceMesh importMesh(const std::filesystem::path& path) { return parseMesh(readTextFile(path)); }

std::string cutsToString(const SurfaceMesh& mesh, const CutSet& cuts) {
  std::string out;
  for (EdgeId e : cuts.edges()) {
    const Edge& edge = mesh.edge(e);
    out += std::to_string(edge.v0 + 1) + " " + std::to_string(edge.v1 + 1) + "\n";
  }
  return out;
}

CutSet parseCuts(const SurfaceMesh& mesh, std::string_view text) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  forEachLine(text, [&](std::size_t lineNo, std::string_view line) {
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text[0] == '#') return;
    if (tokens.size() != 2) parseError(lineNo, tokens[0].column, "cut line needs exactly two vertex ids");
    pairs.emplace_back(parseIndex(tokens[0], lineNo), parseIndex(tokens[1], lineNo));
  });
  return CutSet::fromVertexPairs(mesh, pairs);
}

void writeCutFile(const SurfaceMesh& mesh, const CutSet& cuts, const std::filesystem::path& path) {
  writeTextFile(path, cutsToString(mesh, cuts));
}

CutSet readCutFile(const SurfaceMesh& mesh, const std::filesystem::path& path) {
  return parseCuts(mesh, readTextFile(path));
}

}  // namespace ununfold
