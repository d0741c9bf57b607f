#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "piqc/noise.hpp"
#include "piqc/pauli.hpp"
#include "piqc/pulse_schedule.hpp"
#include "piqc/state_vector.hpp"

namespace piqc {

/// A pulse control channel: the single-qubit Pauli `axis` on `qubit`.
/// Pulse channels enter the Hamiltonian as u * sigma (no factor 1/2).
struct ControlChannel {
  int qubit = 0;
  Axis axis = Axis::X;

  bool operator==(const ControlChannel&) const = default;
};

/// One X and one Y channel per qubit, ordered (X_0, Y_0, X_1, Y_1, ...).
std::vector<ControlChannel> rydberg_channels(int n_qubits);

/// Layered ansatz prod_l [ V R_l(theta_l) ]: each layer applies, for every
/// rotation slot m and qubit q, exp(-i theta sigma_{axis m} / 2), then the
/// diagonal entangler exp(-i entangler_phases).
struct AnsatzSpec {
  int n_qubits = 1;
  int n_layers = 1;
  std::vector<Axis> slot_axes{Axis::Z, Axis::X, Axis::Z};
  std::vector<double> entangler_phases;  // length 2^n
  double tau_v = 10.0;                   // ms
  double tau_g = 1.0;                    // ms

  int rotations_per_layer() const noexcept { return static_cast<int>(slot_axes.size()); }
  std::size_t n_params() const noexcept;
  /// L * (M * n + 1).
  std::size_t gate_count() const noexcept;
  /// L * (tau_g + tau_v), the matching pulse horizon.
  double horizon() const noexcept { return n_layers * (tau_g + tau_v); }
  void validate() const;
};

/// Rydberg-chain ansatz: entangler exp(-i tau_v H0) with nearest-neighbour
/// interaction `interaction` (= c6 / r^6).
AnsatzSpec hardware_efficient_ansatz(int n_qubits, int n_layers, double interaction = 0.1, double tau_v = 10.0,
                                     double tau_g = 1.0,
                                     std::vector<Axis> slot_axes = {Axis::Z, Axis::X, Axis::Z});

/// Angles theta^(l)_{q,m}, flattened as ((l * M) + m) * n + q.
struct CircuitParams {
  int n_layers = 0;
  int rotations_per_layer = 0;
  int n_qubits = 0;
  std::vector<double> angles;

  static CircuitParams zeros(const AnsatzSpec& ansatz);

  std::size_t index(int layer, int slot, int qubit) const noexcept {
    return (static_cast<std::size_t>(layer) * static_cast<std::size_t>(rotations_per_layer) +
            static_cast<std::size_t>(slot)) *
               static_cast<std::size_t>(n_qubits) +
           static_cast<std::size_t>(qubit);
  }
  double& at(int layer, int slot, int qubit) { return angles[index(layer, slot, qubit)]; }
  double at(int layer, int slot, int qubit) const { return angles[index(layer, slot, qubit)]; }

  std::vector<std::size_t> shape() const;
  bool matches(const AnsatzSpec& ansatz) const noexcept;
  bool operator==(const CircuitParams&) const = default;
};

/// Uniform angles in [-2 pi, 2 pi].
CircuitParams random_initial_angles(const AnsatzSpec& ansatz, NoiseStream& stream);

struct CircuitRun {
  StateVector state;
  std::size_t gates_applied = 0;
};

/// Runs the ansatz with angles theta + Delta W (Delta W may be null).
CircuitRun execute_circuit(const StateVector& psi0, const AnsatzSpec& ansatz, const CircuitParams& params,
                           const NoiseRealization* noise = nullptr);

/// Randomized circuit: the ansatz with perturbed angles theta + Delta W.
StateVector run_randomized_circuit(const StateVector& psi0, const AnsatzSpec& ansatz, const CircuitParams& params,
                                   const NoiseRealization& noise);

/// Integrates d psi = -i H0 psi dt - i H_a psi (u_a dt + dW_a) - (D/2) H_a^2 psi dt
/// by splitting: per fine step, the diagonal drift phase, then the exact
/// exponential exp(-i sigma_a (u_a dt + dW_a)) for each channel, then
/// renormalization. The Ito term is carried by the exact exponentials.
/// Throws IntegrationError if a step drifts the norm by more than 1e-6.
StateVector integrate_sse(const StateVector& psi0, std::span<const double> drift_diag,
                          const PulseSchedule& schedule, std::span<const ControlChannel> channels,
                          const WienerPath& path);

/// One sampled trajectory and its cost.
struct TrajectoryRecord {
  NoiseRealization noise;
  StateVector final_state;
  double energy = 0.0;
  double stochastic_cost = 0.0;
};

}  // namespace piqc
