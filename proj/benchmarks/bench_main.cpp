#include <benchmark/benchmark.h>

#include "xychain/exact.hpp"
#include "xychain/model.hpp"
#include "xychain/quench.hpp"

namespace {

using namespace xychain;

void BM_TotalPhase(benchmark::State& state) {
  ChainSpec spec(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    PhaseReport r = total_phase(spec, 2.0);
    benchmark::DoNotOptimize(r.total_raw);
  }
}
BENCHMARK(BM_TotalPhase)->Arg(101)->Arg(1001);

void BM_KinkCountAnalytic(benchmark::State& state) {
  ChainSpec spec(static_cast<int>(state.range(0)), 1.0);
  QuenchSchedule schedule(50.0);
  for (auto _ : state) {
    DefectReport r = kink_count(spec, schedule, KinkMethod::AnalyticLZ);
    benchmark::DoNotOptimize(r.kink_count);
  }
}
BENCHMARK(BM_KinkCountAnalytic)->Arg(101)->Arg(1001);

void BM_EvolveMode(benchmark::State& state) {
  QuenchSchedule schedule(static_cast<double>(state.range(0)));
  double k = pi / 101.0;
  for (auto _ : state) {
    ModeState s = evolve_mode(k, 1.0, schedule);
    benchmark::DoNotOptimize(s.excitation_probability());
  }
}
BENCHMARK(BM_EvolveMode)->Arg(5)->Arg(50);

void BM_BuildAndDiagonalize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = exact::build_hamiltonian(n, 1.0, 2.0, 0.3);
    auto g = exact::ground_state(h, 0.05);
    benchmark::DoNotOptimize(g.energy);
  }
}
BENCHMARK(BM_BuildAndDiagonalize)->Arg(5)->Arg(7)->Arg(9);

void BM_BerryLoop(benchmark::State& state) {
  exact::LoopConfig loop;
  loop.steps = 32;
  for (auto _ : state) {
    auto r = exact::berry_phase_loop(static_cast<int>(state.range(0)), 1.0, 2.0,
                                     loop);
    benchmark::DoNotOptimize(r.phase_mod_2pi);
  }
}
BENCHMARK(BM_BerryLoop)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
