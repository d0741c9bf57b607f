#include <benchmark/benchmark.h>

#include "piqc/models.hpp"
#include "piqc/piqc.hpp"
#include "piqc/spsa.hpp"

namespace {

using namespace piqc;

GateProblem tfim_problem(int n) {
  const auto ansatz = hardware_efficient_ansatz(n, 9);
  NoiseStream init(0, 0, static_cast<std::uint64_t>(StreamDomain::init));
  return GateProblem{build_tfim(n, 1.0, 1.0), StateVector(n), ansatz, random_initial_angles(ansatz, init)};
}

// One AIS step per benchmark iteration: ten trajectories plus the update.
void BM_PiqcGateStep(benchmark::State& state) {
  const auto problem = tfim_problem(static_cast<int>(state.range(0)));
  const AnnealingSchedule one_step{1e-4, 1e-4, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_piqc(problem, one_step, AISConfig{}));
}
BENCHMARK(BM_PiqcGateStep)->DenseRange(2, 6, 2);

void BM_PiqcPulseStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PulseProblem problem{build_tfim(n, 1.0, 1.0), StateVector(n), build_drift_hamiltonian({n, 0.1, 1.0}),
                             rydberg_channels(n), PulseSchedule::uniform(99.0, 11, 2 * n), 200};
  const AnnealingSchedule one_step{1e-4, 1e-4, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_piqc(problem, one_step, AISConfig{}));
}
BENCHMARK(BM_PiqcPulseStep)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

// Five SPSA iterations (ten energy evaluations), matching one PiQC step's budget.
void BM_SpsaFiveIterations(benchmark::State& state) {
  const auto problem = tfim_problem(static_cast<int>(state.range(0)));
  const SPSAConfig cfg{1e-3, 5e-5, 5, 0};
  for (auto _ : state) benchmark::DoNotOptimize(run_spsa(problem, cfg));
}
BENCHMARK(BM_SpsaFiveIterations)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
