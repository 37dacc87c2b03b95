#include <benchmark/benchmark.h>

#include "ununfold/audit.hpp"
#include "ununfold/constructions.hpp"
#include "ununfold/verify.hpp"

using namespace ununfold;

namespace {

void BM_EnumerateDualSpanningTrees(benchmark::State& state) {
  const SurfaceMesh hat = acuteHat().mesh;
  for (auto _ : state) {
    std::size_t n = 0;
    forEachDualSpanningTree(hat, [&](std::span<const EdgeId>) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateDualSpanningTrees);

void BM_MatrixTreeCount(benchmark::State& state) {
  const SurfaceMesh mesh = subdividedCaltrop(static_cast<int>(state.range(0))).mesh;
  for (auto _ : state) benchmark::DoNotOptimize(matrixTreeCount(mesh));
  state.SetLabel(std::to_string(mesh.faceCount()) + " faces");
}
BENCHMARK(BM_MatrixTreeCount)->Arg(1);

void BM_VerifyAcuteHat(benchmark::State& state) {
  const SurfaceMesh hat = acuteHat().mesh;
  VerifyOptions opts;
  opts.mode = static_cast<Precision>(state.range(0));
  opts.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verifyHatNoSinglePiece(hat, opts).conclusion);
  state.SetLabel(std::string(toString(opts.mode)));
}
BENCHMARK(BM_VerifyAcuteHat)
    ->Args({static_cast<int>(Precision::Float), 1})
    ->Args({static_cast<int>(Precision::Interval), 1})
    ->Args({static_cast<int>(Precision::Interval), 4})
    ->Unit(benchmark::kMillisecond);

void BM_DevelopCaltropSingletons(benchmark::State& state) {
  const SurfaceMesh c = caltrop();
  CutSet cuts(c);
  for (EdgeId e = 0; e < c.edgeCount(); ++e) cuts.cut(e);
  for (auto _ : state) benchmark::DoNotOptimize(develop(c, cuts).pieces.size());
}
BENCHMARK(BM_DevelopCaltropSingletons);

void BM_SearchCaltrop(benchmark::State& state) {
  const SurfaceMesh c = caltrop();
  SearchOptions opts;
  opts.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(randomizedUnfoldingSearch(c, opts).bestPieces);
}
BENCHMARK(BM_SearchCaltrop)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
