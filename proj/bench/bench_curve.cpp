// Parallel vs serial evaluation of the erosion curve family, and the corpus
// build used by the verification suites.
#include "innerpar/functionals.hpp"
#include "innerpar/verify.hpp"

#include <benchmark/benchmark.h>

using namespace innerpar;

namespace {

void curve(benchmark::State& state, bool parallel) {
  const auto pair = verify::random_pair(static_cast<int>(state.range(0)), 1, 0);
  for (auto _ : state) {
    CurveFamily f = parallel ? curve_family(pair.omega, pair.k, 65) : curve_family_serial(pair.omega, pair.k, 65);
    benchmark::DoNotOptimize(f.samples.data());
  }
}

void BM_CurveParallel(benchmark::State& state) { curve(state, true); }
void BM_CurveSerial(benchmark::State& state) { curve(state, false); }

void BM_Corpus(benchmark::State& state) {
  verify::Config config;
  config.pairs_2d = 20;
  config.pairs_3d = 5;
  config.parallel = state.range(0) != 0;
  for (auto _ : state) {
    verify::Corpus c = verify::build_corpus(config);
    benchmark::DoNotOptimize(c.entries.data());
  }
}

}  // namespace

BENCHMARK(BM_CurveParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Corpus)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
