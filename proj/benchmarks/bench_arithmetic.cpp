#include <benchmark/benchmark.h>

#include "phisat/q5.hpp"

using namespace phisat;

static void BM_Q5Sign(benchmark::State& state) {
  const Q5 x = Q5::one_minus_phi() * (Q5(mpz_class(7)) - Q5::phi().scaled(mpz_class(12))) -
               Q5::gamma();
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_Q5Sign);

static void BM_Q5CaseTest(benchmark::State& state) {
  // The per-variable case test as run inside the solver loop.
  const mpz_class pos(7), neg(12);
  for (auto _ : state) {
    const Q5 eps = Q5(pos) - Q5::phi().scaled(neg);
    benchmark::DoNotOptimize((Q5::one_minus_phi() * eps - Q5::gamma()).sign());
  }
}
BENCHMARK(BM_Q5CaseTest);

static void BM_FloorPhiTimes(benchmark::State& state) {
  const mpz_class w("123456789123456789");
  for (auto _ : state) benchmark::DoNotOptimize(floor_phi_times(w));
}
BENCHMARK(BM_FloorPhiTimes);
