#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ununfold/predicates.hpp"

using namespace ununfold;

namespace {

std::vector<Triangle2> randomTriangles(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Triangle2> out;
  while (out.size() < n) {
    Triangle2 t{{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}};
    if (orient2d(t[0], t[1], t[2]) == Orientation::Right) std::swap(t[1], t[2]);
    out.push_back(t);
  }
  return out;
}

void BM_Orient2d(benchmark::State& state) {
  const Precision mode = static_cast<Precision>(state.range(0));
  const auto tris = randomTriangles(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Triangle2& t = tris[i++ & 1023];
    benchmark::DoNotOptimize(orient2d(t[0], t[1], t[2], mode));
  }
  state.SetLabel(std::string(toString(mode)));
}
BENCHMARK(BM_Orient2d)->Arg(static_cast<int>(Precision::Float))->Arg(static_cast<int>(Precision::Interval));

void BM_TriangleOverlap(benchmark::State& state) {
  const Precision mode = static_cast<Precision>(state.range(0));
  const auto tris = randomTriangles(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Triangle2& a = tris[i & 1023];
    const Triangle2& b = tris[(i * 7 + 3) & 1023];
    ++i;
    benchmark::DoNotOptimize(trianglesInteriorOverlap(a, b, mode));
  }
  state.SetLabel(std::string(toString(mode)));
}
BENCHMARK(BM_TriangleOverlap)->Arg(static_cast<int>(Precision::Float))->Arg(static_cast<int>(Precision::Interval));

void BM_PentagonMargin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pentagonMargin(105.0));
}
BENCHMARK(BM_PentagonMargin);

}  // namespace
