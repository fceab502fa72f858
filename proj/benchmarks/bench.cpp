#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "fracdyn/analysis.hpp"
#include "fracdyn/kernel.hpp"
#include "fracdyn/simulator.hpp"
#include "fracdyn/zero_one.hpp"

namespace {

using namespace fracdyn;

void BM_BuildKernel(benchmark::State& state) {
  const auto capacity = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_kernel(FractionalOrder(0.8), capacity));
}
BENCHMARK(BM_BuildKernel)->Arg(1000)->Arg(100000);

void BM_Simulate(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const SimConfig config{MapSpec::gompertz(1.0), FractionalOrder(0.8), 0.3, steps};
  const auto kernel = build_kernel(config.q, steps);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(config, kernel));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(500)->Arg(1000)->Arg(2000)->Complexity(benchmark::oNSquared);

void BM_Test01(benchmark::State& state) {
  const SimConfig config{MapSpec::gompertz(1.0), FractionalOrder(0.8), 0.3, 1000};
  const auto kernel = build_kernel(config.q, config.steps);
  const auto traj = simulate(config, kernel);
  const std::vector<double> tail(traj.samples.begin() + 500, traj.samples.end());
  for (auto _ : state) benchmark::DoNotOptimize(run_test01(tail));
}
BENCHMARK(BM_Test01)->Unit(benchmark::kMillisecond);

void BM_GammaSweep(benchmark::State& state) {
  SweepSpec spec{SweepAxis::Gamma, -0.05, 0.05, static_cast<std::size_t>(state.range(0)),
                 SimConfig{MapSpec::gompertz(1.0), FractionalOrder(0.8), 0.3, 1000}};
  spec.control = ControlSchedule::multiplicative(0.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_GammaSweep)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
