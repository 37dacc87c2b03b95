#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "ununfold/io.hpp"
#include "ununfold/overlap.hpp"

namespace ununfold {

namespace {

std::string fmt(double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 4);
  return std::string(buf, res.ptr);
}

std::string_view fillFor(RegionLabel r) {
  switch (r) {
    case RegionLabel::Brim: return "#9ec5e8";
    case RegionLabel::Band: return "#f6e27a";
    case RegionLabel::Crown: return "#f4b6c8";
    case RegionLabel::Base: return "#d9d9d9";
    case RegionLabel::Other: break;
  }
  return "#eeeeee";
}

struct Box {
  double minX = std::numeric_limits<double>::infinity(), minY = minX;
  double maxX = -std::numeric_limits<double>::infinity(), maxY = maxX;
  void add(Point2 p) {
    minX = std::min(minX, p.x);
    minY = std::min(minY, p.y);
    maxX = std::max(maxX, p.x);
    maxY = std::max(maxY, p.y);
  }
};

}  // namespace

std::string renderSvg(const SurfaceMesh& mesh, const CutSet& cuts, const Unfolding& unfolding,
                      const SvgOptions& options, SvgLayout* layoutOut) {
  const std::size_t n = unfolding.pieces.size();
  std::vector<Box> boxes(n);
  double cellW = 0, cellH = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Triangle2& t : unfolding.pieces[i].triangles) {
      for (const Point2& p : t) boxes[i].add(p);
    }
    cellW = std::max(cellW, boxes[i].maxX - boxes[i].minX);
    cellH = std::max(cellH, boxes[i].maxY - boxes[i].minY);
  }
  const std::size_t columns =
      options.columns > 0 ? options.columns
                          : std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
  const std::size_t rows = n == 0 ? 0 : (n + columns - 1) / columns;

  SvgLayout layout;
  layout.scale = options.scale;
  layout.margin = options.margin;
  for (std::size_t i = 0; i < n; ++i) {
    const double cx = static_cast<double>(i % columns) * (cellW + options.gap);
    const double cy = static_cast<double>(i / columns) * (cellH + options.gap);
    layout.offsets.push_back({cx - boxes[i].minX, cy - boxes[i].minY});
  }
  const std::size_t usedColumns = std::min(columns, n);
  layout.width = 2 * options.margin +
                 options.scale * (static_cast<double>(usedColumns) * cellW +
                                  static_cast<double>(usedColumns > 0 ? usedColumns - 1 : 0) * options.gap);
  layout.height = 2 * options.margin + options.scale * (static_cast<double>(rows) * cellH +
                                                        static_cast<double>(rows > 0 ? rows - 1 : 0) * options.gap);

  auto map = [&](std::size_t piece, Point2 p) {
    return Point2{options.scale * (p.x + layout.offsets[piece].x) + options.margin,
                  options.scale * (p.y + layout.offsets[piece].y) + options.margin};
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(layout.width) + "\" height=\"" +
         fmt(layout.height) + "\" viewBox=\"0 0 " + fmt(layout.width) + " " + fmt(layout.height) + "\">\n";
  out += "<style>.fold{stroke:#444;stroke-width:0.6}.cut{stroke:#000;stroke-width:1.2;stroke-dasharray:4 3}"
         ".overlap{stroke:#d00000;stroke-width:2}</style>\n";
  for (std::size_t i = 0; i < n; ++i) {
    const DevelopedPiece& piece = unfolding.pieces[i];
    std::set<FaceId> overlapping;
    for (const OverlapPair& p : pieceOverlapReport(mesh, piece, Precision::Float).pairs) {
      overlapping.insert(p.a);
      overlapping.insert(p.b);
    }
    out += "<g class=\"piece\" data-piece=\"" + std::to_string(i) + "\">\n";
    for (std::size_t k = 0; k < piece.plan.size(); ++k) {
      const FaceId f = piece.plan[k].face;
      const Triangle2& t = piece.triangles[k];
      std::string points;
      for (int c = 0; c < 3; ++c) {
        const Point2 q = map(i, t[c]);
        points += (c ? " " : "") + fmt(q.x) + "," + fmt(q.y);
      }
      const RegionLabel region = mesh.label(f).region;
      out += "<polygon data-face=\"" + std::to_string(f) + "\" data-region=\"" + std::string(toString(region)) +
             "\" fill=\"" + std::string(fillFor(region)) + "\"" +
             (overlapping.count(f) ? " class=\"overlap\"" : " stroke=\"none\"") + " points=\"" + points + "\"/>\n";
    }
    for (std::size_t k = 0; k < piece.plan.size(); ++k) {
      const FaceId f = piece.plan[k].face;
      const Triangle2& t = piece.triangles[k];
      const auto& fe = mesh.faceEdges(f);
      for (int c = 0; c < 3; ++c) {
        const Edge& e = mesh.edge(fe[c]);
        const bool fold = !e.isBoundary() && !cuts.isCut(fe[c]);
        if (fold && f != std::min(e.f0, e.f1)) continue;
        const Point2 a = map(i, t[c]), b = map(i, t[(c + 1) % 3]);
        out += std::string("<line class=\"") + (fold ? "fold" : "cut") + "\" x1=\"" + fmt(a.x) + "\" y1=\"" +
               fmt(a.y) + "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  if (layoutOut) *layoutOut = std::move(layout);
  return out;
}

void exportSvg(const SurfaceMesh& mesh, const CutSet& cuts, const Unfolding& unfolding,
               const std::filesystem::path& path, const SvgOptions& options) {
  writeTextFile(path, renderSvg(mesh, cuts, unfolding, options));
}

}  // namespace ununfold
