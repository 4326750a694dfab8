#include <benchmark/benchmark.h>

#include "fieldquanta/catalog.hpp"
#include "fieldquanta/cli.hpp"
#include "fieldquanta/modes.hpp"
#include "fieldquanta/reps.hpp"

using namespace fieldquanta;

namespace {

RepData higgs_rep() { return catalog::builtin("standard-model").find("higgs")->internal; }

}  // namespace

static void BM_CommutantSo3(benchmark::State& state) {
  const RepData rep = catalog::builtin("kg-internal(3)").fields[0].internal;
  for (auto _ : state) benchmark::DoNotOptimize(reps::commutant(rep));
}
BENCHMARK(BM_CommutantSo3);

// so(n) acting on R^n, n from the argument
static void BM_CommutantSoN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RepData rep = catalog::builtin("kg-internal(" + std::to_string(n) + ")").fields[0].internal;
  for (auto _ : state) benchmark::DoNotOptimize(reps::commutant(rep));
}
BENCHMARK(BM_CommutantSoN)->Arg(4)->Arg(8)->Arg(12);

static void BM_RealTypeHiggs(benchmark::State& state) {
  const RepData rep = higgs_rep();
  for (auto _ : state) benchmark::DoNotOptimize(reps::real_type(rep));
}
BENCHMARK(BM_RealTypeHiggs);

static void BM_ClassifyStandardModel(benchmark::State& state) {
  const TheorySpec spec = catalog::builtin("standard-model");
  RunConfig cfg;
  cfg.builtin = "standard-model";
  for (auto _ : state) benchmark::DoNotOptimize(cli::classify(spec, cfg));
}
BENCHMARK(BM_ClassifyStandardModel)->Unit(benchmark::kMillisecond);

static void BM_AntiparticleContent(benchmark::State& state) {
  const RepData rep = catalog::builtin("complex-kg").fields[0].internal;
  const int sites = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modes::antiparticle_content(rep, Dispersion::relativistic(1.0), sites));
  }
}
BENCHMARK(BM_AntiparticleContent)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK_MAIN();
