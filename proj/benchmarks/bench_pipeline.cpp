#include <benchmark/benchmark.h>

#include "phisat/compact_solver.hpp"
#include "phisat/generate.hpp"
#include "phisat/lower_bound.hpp"
#include "phisat/oracle.hpp"

using namespace phisat;

static void BM_LowerBoundPipeline(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.family = Family::Ucf;
  cfg.variable_count = static_cast<int>(state.range(0));
  cfg.clause_count = static_cast<int>(state.range(0)) * 5;
  cfg.max_weight = 10;
  cfg.seed = 20240842;
  const Formula f = generate(cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(improved_lower_bound(f).achieved);
}
BENCHMARK(BM_LowerBoundPipeline)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_CompactSolver(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.family = Family::Compact;
  cfg.variable_count = static_cast<int>(state.range(0));
  cfg.clause_count = static_cast<int>(state.range(0)) * 4;
  cfg.max_weight = 5;
  cfg.seed = 3;
  const Formula f = generate(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(solve_compact(f).achieved);
}
BENCHMARK(BM_CompactSolver)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_ExactOracle(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.family = Family::General;
  cfg.variable_count = static_cast<int>(state.range(0));
  cfg.clause_count = 40;
  cfg.max_weight = 5;
  cfg.seed = 7;
  const Formula f = generate(cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_sat_exact(f, 24).optimum);
}
BENCHMARK(BM_ExactOracle)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
