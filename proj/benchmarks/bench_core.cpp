#include <benchmark/benchmark.h>

#include "dessins/classify.hpp"
#include "dessins/dessin.hpp"
#include "dessins/ops.hpp"

using namespace dessins;

namespace {

void BM_GeneratingPairs(benchmark::State& state, const char* spec) {
  GroupPtr g = build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(generating_pairs(*g));
}
BENCHMARK_CAPTURE(BM_GeneratingPairs, meta64, "metacyclic:8,8,5");
BENCHMARK_CAPTURE(BM_GeneratingPairs, heisenberg3, "heisenberg:3");

void BM_AutomorphismGroup(benchmark::State& state, const char* spec) {
  GroupPtr g = build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(*g));
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, q8, "q8");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, meta64, "metacyclic:8,8,5");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, heisenberg3, "heisenberg:3");

void BM_ClassifyDessins(benchmark::State& state, const char* spec) {
  GroupPtr g = build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(classify_dessins(g));
}
BENCHMARK_CAPTURE(BM_ClassifyDessins, cyclic24, "cyclic:24");
BENCHMARK_CAPTURE(BM_ClassifyDessins, meta64, "metacyclic:8,8,5");

void BM_Join144(benchmark::State& state) {
  auto cls = classify_dessins(build_group("alt4"));
  Dessin d3 = cls.representatives[2], d4 = cls.representatives[3];
  for (auto _ : state) benchmark::DoNotOptimize(join(d3, d4));
}
BENCHMARK(BM_Join144);

void BM_ClassifyAbelian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_abelian(1, 12));
}
BENCHMARK(BM_ClassifyAbelian);

}  // namespace

BENCHMARK_MAIN();
