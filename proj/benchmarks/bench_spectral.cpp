#include <benchmark/benchmark.h>

#include "locfin/complexity.hpp"
#include "locfin/deficiency.hpp"
#include "locfin/generators.hpp"
#include "locfin/spectral.hpp"

using namespace locfin;

namespace {

void BM_Truncate(benchmark::State& state) {
  const auto family = chainedStarCliques(1);
  for (auto _ : state) benchmark::DoNotOptimize(truncate(family, static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Truncate)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_TriangleCounts(benchmark::State& state) {
  const auto g = truncate(chainedStarCliques(1), static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (VertexId x = 0; x < g.vertexCount(); ++x) total += g.triangleCount(x);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_TriangleCounts)->Arg(1000)->Arg(10000);

void BM_DenseSpectrum(benchmark::State& state) {
  const auto op = adjacencyMatrix(truncate(chainedStarCliques(1), static_cast<std::size_t>(state.range(0))).graph);
  for (auto _ : state) benchmark::DoNotOptimize(denseSpectrum(op));
}
BENCHMARK(BM_DenseSpectrum)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_LanczosExtremes(benchmark::State& state) {
  const auto op = adjacencyMatrix(truncate(chainedStarCliques(1), static_cast<std::size_t>(state.range(0))).graph);
  for (auto _ : state) benchmark::DoNotOptimize(extremalEigenvalues(op, Which::Both));
}
BENCHMARK(BM_LanczosExtremes)->Arg(200)->Arg(800)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_StarWitness(benchmark::State& state) {
  const auto g = truncate(hubOfCliques(static_cast<std::size_t>(state.range(0)), 4), 4 * state.range(0) + 1).graph;
  for (auto _ : state) benchmark::DoNotOptimize(starOrderAt(g, 0, 64));
}
BENCHMARK(BM_StarWitness)->Arg(4)->Arg(12);

void BM_FTreeDeficiency(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fTreeDeficiencyVector(1.0, static_cast<std::size_t>(state.range(0)), 1.0));
}
BENCHMARK(BM_FTreeDeficiency)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
