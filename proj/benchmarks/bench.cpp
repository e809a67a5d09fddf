#include <benchmark/benchmark.h>

#include "fano/atlas.hpp"
#include "fano/enumerate.hpp"
#include "fano/numring.hpp"

namespace {

void BM_EnumerateP2(benchmark::State& st) {
  const fano::Int cap = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(fano::enumerate_P2(cap));
}
BENCHMARK(BM_EnumerateP2)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_EnumerateP1xP1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fano::enumerate_P1P1_rho4());
}
BENCHMARK(BM_EnumerateP1xP1)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& st) {
  const auto& atlas = fano::default_atlas();
  for (auto _ : st) benchmark::DoNotOptimize(atlas.verify_all());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

void BM_BlowupRing(benchmark::State& st) {
  auto r = fano::seed_space("P(O+O(1,1))/P1xP1");
  fano::CurveData c{1, {2, 1, 1}};
  for (auto _ : st) benchmark::DoNotOptimize(fano::anticanonical_degree(fano::blowup_ring(r, c)));
}
BENCHMARK(BM_BlowupRing);

void BM_LoadAtlas(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fano::Atlas::from_json(fano::atlas_json_text()));
}
BENCHMARK(BM_LoadAtlas)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
