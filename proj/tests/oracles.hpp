#pragma once

// Independent reference computations used to freeze expected values. None of
// these share code paths with the library: exact rationals instead of
// expansions, dense floating elimination instead of Bareiss, breadth-first
// search instead of union-find.

#include <gmpxx.h>

#include <cmath>
#include <queue>
#include <vector>

#include "ununfold/mesh.hpp"
#include "ununfold/unfold.hpp"

namespace oracle {

/// Exact sign of orient2d over the rationals.
inline int exactOrientSign(ununfold::Point2 a, ununfold::Point2 b, ununfold::Point2 c) {
  const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const mpq_class det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sgn(det);
}

/// Kirchhoff count of dual spanning trees by dense Gaussian elimination with
/// partial pivoting in long double, rounded to the nearest integer.
inline long long kirchhoffDouble(const ununfold::SurfaceMesh& mesh) {
  const std::size_t n = mesh.faceCount();
  if (n <= 1) return 1;
  const std::size_t m = n - 1;
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m, 0));
  for (const auto& e : mesh.edges()) {
    if (e.isBoundary()) continue;
    if (e.f0 < m) a[e.f0][e.f0] += 1;
    if (e.f1 < m) a[e.f1][e.f1] += 1;
    if (e.f0 < m && e.f1 < m) {
      a[e.f0][e.f1] -= 1;
      a[e.f1][e.f0] -= 1;
    }
  }
  long double det = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (std::fabs(a[i][k]) > std::fabs(a[p][k])) p = i;
    }
    if (a[p][k] == 0) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const long double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < m; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return std::llround(det);
}

/// Pieces by breadth-first search across uncut interior edges.
inline std::size_t pieceCountBfs(const ununfold::SurfaceMesh& mesh, const ununfold::CutSet& cuts) {
  std::vector<char> seen(mesh.faceCount(), 0);
  std::size_t pieces = 0;
  for (ununfold::FaceId s = 0; s < mesh.faceCount(); ++s) {
    if (seen[s]) continue;
    ++pieces;
    std::queue<ununfold::FaceId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const auto f = q.front();
      q.pop();
      for (auto e : mesh.faceEdges(f)) {
        const auto& edge = mesh.edge(e);
        if (edge.isBoundary() || cuts.isCut(e)) continue;
        const auto g = edge.other(f);
        if (!seen[g]) {
          seen[g] = 1;
          q.push(g);
        }
      }
    }
  }
  return pieces;
}

/// Cycle rank of the cut graph (edges minus vertices plus components), by BFS.
inline std::size_t cutGraphCycleRank(const ununfold::SurfaceMesh& mesh, const ununfold::CutSet& cuts) {
  std::vector<std::vector<ununfold::VertexId>> adj(mesh.vertexCount());
  std::size_t edges = 0;
  for (auto e : cuts.edges()) {
    adj[mesh.edge(e).v0].push_back(mesh.edge(e).v1);
    adj[mesh.edge(e).v1].push_back(mesh.edge(e).v0);
    ++edges;
  }
  std::size_t vertices = 0, components = 0;
  std::vector<char> seen(mesh.vertexCount(), 0);
  for (ununfold::VertexId s = 0; s < mesh.vertexCount(); ++s) {
    if (adj[s].empty() || seen[s]) continue;
    ++components;
    std::queue<ununfold::VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      ++vertices;
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return edges + components - vertices;
}

/// Closed-form edge lengths of the acute hat with boundary side s.
inline double acuteLeg(double s) { return s / (2.0 * std::cos(47.5 * M_PI / 180.0)); }
inline double acuteInner(double s) { return 2.0 * acuteLeg(s) * std::sin(5.0 * M_PI / 180.0); }

}  // namespace oracle
