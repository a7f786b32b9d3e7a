#include <benchmark/benchmark.h>

#include <random>

#include "thermistor/simulator.hpp"

namespace {

using namespace thermistor;

TridiagonalSystem random_dominant(std::size_t n) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TridiagonalSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.rhs[i] = u(rng);
        if (i + 1 < n) {
            sys.sub[i] = u(rng);
            sys.super[i] = u(rng);
        }
    }
    for (std::size_t i = 0; i < n; ++i) sys.main[i] = 2.5 + u(rng);
    return sys;
}

void BM_ThomasSolve(benchmark::State& state) {
    const TridiagonalSystem sys = random_dominant(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thomas_solve(sys));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThomasSolve)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

SimulationConfig base_config(std::size_t n) {
    SimulationConfig c;
    c.n_elements = n;
    c.record_every = 1000000;
    return c;
}

void BM_CoupledStep(benchmark::State& state) {
    const Simulation sim(base_config(static_cast<std::size_t>(state.range(0))));
    TemperatureState s = initial_temperature(sim.mesh());
    for (int i = 0; i < 5; ++i) s = sim.step(s).temperature;
    for (auto _ : state) benchmark::DoNotOptimize(sim.step(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoupledStep)->RangeMultiplier(4)->Range(100, 25600)->Complexity(benchmark::oN);

void BM_RunToSteadyState(benchmark::State& state) {
    const SimulationConfig c = base_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run(c));
}
BENCHMARK(BM_RunToSteadyState)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_RunReduced(benchmark::State& state) {
    const SimulationConfig c = base_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_reduced(c));
}
BENCHMARK(BM_RunReduced)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
