#pragma once

#include <cstdint>
#include <vector>

#include "piqc/ais.hpp"
#include "piqc/cost.hpp"
#include "piqc/dynamics.hpp"
#include "piqc/pauli.hpp"
#include "piqc/trace.hpp"

namespace piqc {

/// Trajectory count, cost weights and seed. lambda is never stored: at noise
/// level D it is R * D.
struct AISConfig {
  double q_weight = 2.0e4;
  double r_weight = 1.0;
  int n_traj = 10;
  std::uint64_t master_seed = 0;

  double lambda(double noise) const noexcept { return r_weight * noise; }
  CostWeights weights() const noexcept { return {q_weight, r_weight}; }
  void validate() const;
};

struct GateProblem {
  PauliSum hamiltonian;
  StateVector initial_state;
  AnsatzSpec ansatz;
  CircuitParams initial_params;
};

struct PulseProblem {
  PauliSum hamiltonian;
  StateVector initial_state;
  std::vector<double> drift_diag;
  std::vector<ControlChannel> channels;
  PulseSchedule initial_controls;
  int substeps = 200;  // fine SSE steps per segment
};

/// Controls above this magnitude abort the run.
inline constexpr double kDivergenceBound = 1e6;

/// Annealed adaptive importance sampling. For each D_j (lambda_j = R D_j) and
/// each of n_s steps: sample n_traj trajectories at the current controls,
/// weight them by their stochastic costs and apply the AIS update. One trace
/// row per step. Non-finite costs or controls beyond kDivergenceBound stop
/// the run with `diverged` set.
OptimizationTrace run_piqc(const GateProblem& problem, const AnnealingSchedule& schedule, const AISConfig& config);
OptimizationTrace run_piqc(const PulseProblem& problem, const AnnealingSchedule& schedule, const AISConfig& config);

/// Samples one gate-mode trajectory (used by run_piqc; exposed for tests).
TrajectoryRecord sample_gate_trajectory(const GateProblem& problem, const CircuitParams& theta, double noise,
                                        const CostWeights& weights, NoiseStream& stream);
TrajectoryRecord sample_pulse_trajectory(const PulseProblem& problem, const PulseSchedule& controls, double noise,
                                         const CostWeights& weights, NoiseStream& stream);

}  // namespace piqc
