#include <gmp.h>

#include <string>

#include "ununfold/error.hpp"
#include "ununfold/verify.hpp"

namespace ununfold {

namespace {

/// Union-find without path compression so unions can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_, size_, history_;
};

struct TreeWalker {
  const SurfaceMesh& disk;
  const std::vector<EdgeId>& arcs;
  const std::function<void(std::span<const EdgeId>)>& visit;
  RollbackUnionFind uf;
  std::vector<EdgeId> chosen;

  void run(std::size_t i) {
    const std::size_t needed = disk.faceCount() - 1 - chosen.size();
    if (needed == 0) {
      visit(chosen);
      return;
    }
    if (arcs.size() - i < needed) return;
    const Edge& e = disk.edge(arcs[i]);
    if (uf.unite(e.f0, e.f1)) {
      chosen.push_back(arcs[i]);
      run(i + 1);
      chosen.pop_back();
      uf.undo();
    }
    run(i + 1);
  }
};

/// RAII square matrix of GMP integers.
class MpzMatrix {
 public:
  explicit MpzMatrix(std::size_t n) : n_(n), cells_(n * n) {
    for (auto& c : cells_) mpz_init(c.v);
  }
  ~MpzMatrix() {
    for (auto& c : cells_) mpz_clear(c.v);
  }
  MpzMatrix(const MpzMatrix&) = delete;
  MpzMatrix& operator=(const MpzMatrix&) = delete;
  mpz_ptr at(std::size_t r, std::size_t c) { return cells_[r * n_ + c].v; }

 private:
  struct Cell {
    mpz_t v;
  };
  std::size_t n_;
  std::vector<Cell> cells_;
};

}  // namespace

void forEachDualSpanningTree(const SurfaceMesh& disk, const std::function<void(std::span<const EdgeId>)>& visit) {
  if (disk.faceCount() > kMaxEnumerationFaces) {
    throw Error(ErrorCode::TooLarge, std::to_string(disk.faceCount()) + " faces exceeds the enumeration limit of " +
                                         std::to_string(kMaxEnumerationFaces));
  }
  std::vector<EdgeId> arcs;
  for (EdgeId e = 0; e < disk.edgeCount(); ++e) {
    if (!disk.edge(e).isBoundary()) arcs.push_back(e);
  }
  TreeWalker walker{disk, arcs, visit, RollbackUnionFind(disk.faceCount()), {}};
  walker.run(0);
}

std::vector<std::vector<EdgeId>> enumerateDualSpanningTrees(const SurfaceMesh& disk) {
  std::vector<std::vector<EdgeId>> out;
  forEachDualSpanningTree(disk, [&](std::span<const EdgeId> t) { out.emplace_back(t.begin(), t.end()); });
  return out;
}

std::uint64_t matrixTreeCount(const SurfaceMesh& mesh) {
  const std::size_t n = mesh.faceCount();
  if (n <= 1) return 1;
  // Reduced Laplacian of the dual graph: drop the last face.
  const std::size_t m = n - 1;
  MpzMatrix a(m);
  for (const Edge& e : mesh.edges()) {
    if (e.isBoundary()) continue;
    for (FaceId f : {e.f0, e.f1}) {
      if (f < m) mpz_add_ui(a.at(f, f), a.at(f, f), 1);
    }
    if (e.f0 < m && e.f1 < m) {
      mpz_sub_ui(a.at(e.f0, e.f1), a.at(e.f0, e.f1), 1);
      mpz_sub_ui(a.at(e.f1, e.f0), a.at(e.f1, e.f0), 1);
    }
  }

  // Bareiss elimination: every division is exact.
  mpz_t prev, tmp;
  mpz_init_set_ui(prev, 1);
  mpz_init(tmp);
  int sign = 1;
  bool singular = false;
  for (std::size_t k = 0; k < m && !singular; ++k) {
    if (mpz_sgn(a.at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < m && mpz_sgn(a.at(p, k)) == 0) ++p;
      if (p == m) {
        singular = true;
        break;
      }
      for (std::size_t c = 0; c < m; ++c) mpz_swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        mpz_mul(tmp, a.at(i, j), a.at(k, k));
        mpz_submul(tmp, a.at(i, k), a.at(k, j));
        mpz_divexact(a.at(i, j), tmp, prev);
      }
    }
    mpz_set(prev, a.at(k, k));
  }
  std::uint64_t result = 0;
  bool fits = true;
  if (!singular) {
    mpz_set(tmp, a.at(m - 1, m - 1));
    if (sign < 0) mpz_neg(tmp, tmp);
    fits = mpz_sgn(tmp) >= 0 && mpz_sizeinbase(tmp, 2) <= 64;
    if (fits) {
      mpz_export(&result, nullptr, -1, sizeof(result), 0, 0, tmp);
    }
  }
  mpz_clear(prev);
  mpz_clear(tmp);
  if (!fits) throw Error(ErrorCode::TooLarge, "spanning tree count exceeds 64 bits");
  return result;
}

}  // namespace ununfold
