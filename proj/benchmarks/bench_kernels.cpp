#include <benchmark/benchmark.h>

#include "piqc/dynamics.hpp"
#include "piqc/eigensolver.hpp"
#include "piqc/models.hpp"
#include "piqc/noise.hpp"
#include "piqc/pauli.hpp"

namespace {

using namespace piqc;

StateVector random_state(int n, NoiseStream& rng) {
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {rng.normal(), rng.normal()};
  StateVector s(n, std::move(amps));
  s.normalize();
  return s;
}

PauliSum random_sum(int n, int terms, NoiseStream& rng) {
  PauliSum h(n);
  for (int t = 0; t < terms; ++t) {
    std::string axes;
    for (int q = 0; q < n; ++q) axes += "IXYZ"[rng() % 4];
    h.add(rng.normal(), axes);
  }
  return h;
}

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream rng(1, 0);
  const auto psi = random_state(n, rng);
  const auto h = random_sum(n, 100, rng);
  for (auto _ : state) benchmark::DoNotOptimize(expectation(psi, h));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_Expectation)->DenseRange(4, 12, 4);

void BM_Rotation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream rng(2, 0);
  auto psi = random_state(n, rng);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) rotate_in_place(psi, q, Axis::X, 0.1);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Rotation)->DenseRange(4, 16, 4);

void BM_RandomizedCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream rng(3, 0);
  const auto ansatz = hardware_efficient_ansatz(n, 9);
  const auto theta = random_initial_angles(ansatz, rng);
  const auto noise = sample_noise(ansatz, 1e-4, rng);
  const StateVector psi0(n);
  for (auto _ : state) benchmark::DoNotOptimize(run_randomized_circuit(psi0, ansatz, theta, noise));
}
BENCHMARK(BM_RandomizedCircuit)->DenseRange(2, 8, 2);

void BM_IntegrateSse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream rng(4, 0);
  auto schedule = PulseSchedule::uniform(99.0, 11, 2 * n);
  for (auto& v : schedule.values()) v = rng.uniform(-0.1, 0.1);
  const auto drift = build_drift_hamiltonian({n, 0.1, 1.0});
  const auto channels = rydberg_channels(n);
  const auto path = sample_wiener_path(schedule, 200, 1e-4, rng);
  const StateVector psi0(n);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_sse(psi0, drift, schedule, channels, path));
}
BENCHMARK(BM_IntegrateSse)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

void BM_ExactGroundState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = build_tfim(n, 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_ground_state(h));
}
BENCHMARK(BM_ExactGroundState)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
