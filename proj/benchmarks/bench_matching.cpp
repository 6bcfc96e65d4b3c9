#include <benchmark/benchmark.h>

#include "phisat/autarky.hpp"
#include "phisat/generate.hpp"
#include "phisat/matching.hpp"

using namespace phisat;

static Formula instance(int n, int m) {
  GeneratorConfig cfg;
  cfg.family = Family::Ucf;
  cfg.variable_count = n;
  cfg.clause_count = m;
  cfg.max_weight = 5;
  cfg.seed = 1;
  return generate(cfg);
}

static void BM_MaximumMatching(benchmark::State& state) {
  const Formula f = instance(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) * 5);
  const IncidenceGraph g = build_incidence(f);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g).size);
}
BENCHMARK(BM_MaximumMatching)->Arg(100)->Arg(1000)->Arg(4000);

static void BM_MatchingAutarky(benchmark::State& state) {
  const Formula f = instance(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) * 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(matching_autarky(f).autark_variables.size());
}
BENCHMARK(BM_MatchingAutarky)->Arg(100)->Arg(1000);
