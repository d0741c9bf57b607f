#include "piqc/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "piqc/errors.hpp"
#include "piqc/models.hpp"

namespace piqc {

PulseSchedule::PulseSchedule(std::vector<double> segment_bounds, int n_channels)
    : bounds_(std::move(segment_bounds)), n_channels_(n_channels) {
  if (bounds_.size() < 2) throw InputError("a pulse schedule needs at least one segment");
  if (bounds_.front() != 0.0) throw InputError("segment bounds must start at t = 0");
  for (std::size_t k = 1; k < bounds_.size(); ++k) {
    if (!(bounds_[k] > bounds_[k - 1]) || !std::isfinite(bounds_[k])) {
      throw InputError("segment bounds must be finite and strictly increasing");
    }
  }
  if (n_channels < 1) throw InputError("a pulse schedule needs at least one channel");
  values_.assign((bounds_.size() - 1) * static_cast<std::size_t>(n_channels), 0.0);
}

PulseSchedule PulseSchedule::uniform(double duration, int n_segments, int n_channels) {
  if (n_segments < 1 || !(duration > 0.0)) throw InputError("uniform schedule needs K >= 1 and T > 0");
  std::vector<double> bounds(static_cast<std::size_t>(n_segments) + 1);
  for (int k = 0; k <= n_segments; ++k) bounds[static_cast<std::size_t>(k)] = duration * k / n_segments;
  bounds.back() = duration;
  return PulseSchedule(std::move(bounds), n_channels);
}

std::vector<ControlChannel> rydberg_channels(int n_qubits) {
  std::vector<ControlChannel> out;
  for (int q = 0; q < n_qubits; ++q) {
    out.push_back({q, Axis::X});
    out.push_back({q, Axis::Y});
  }
  return out;
}

std::size_t AnsatzSpec::n_params() const noexcept {
  return static_cast<std::size_t>(n_layers) * slot_axes.size() * static_cast<std::size_t>(n_qubits);
}

std::size_t AnsatzSpec::gate_count() const noexcept {
  return static_cast<std::size_t>(n_layers) * (slot_axes.size() * static_cast<std::size_t>(n_qubits) + 1);
}

void AnsatzSpec::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("ansatz qubit count out of range");
  if (n_layers < 1) throw InputError("ansatz needs at least one layer");
  if (slot_axes.empty()) throw InputError("ansatz needs at least one rotation per layer");
  if (entangler_phases.size() != (std::size_t{1} << n_qubits)) {
    throw InputError("entangler phase vector must have length 2^n");
  }
}

AnsatzSpec hardware_efficient_ansatz(int n_qubits, int n_layers, double interaction, double tau_v, double tau_g,
                                     std::vector<Axis> slot_axes) {
  AnsatzSpec a;
  a.n_qubits = n_qubits;
  a.n_layers = n_layers;
  a.slot_axes = std::move(slot_axes);
  a.tau_v = tau_v;
  a.tau_g = tau_g;
  a.entangler_phases = build_drift_hamiltonian({n_qubits, interaction, 1.0});
  for (auto& p : a.entangler_phases) p *= tau_v;
  a.validate();
  return a;
}

CircuitParams CircuitParams::zeros(const AnsatzSpec& ansatz) {
  return CircuitParams{ansatz.n_layers, ansatz.rotations_per_layer(), ansatz.n_qubits,
                       std::vector<double>(ansatz.n_params(), 0.0)};
}

std::vector<std::size_t> CircuitParams::shape() const {
  return {static_cast<std::size_t>(n_layers), static_cast<std::size_t>(rotations_per_layer),
          static_cast<std::size_t>(n_qubits)};
}

bool CircuitParams::matches(const AnsatzSpec& ansatz) const noexcept {
  return n_layers == ansatz.n_layers && rotations_per_layer == ansatz.rotations_per_layer() &&
         n_qubits == ansatz.n_qubits && angles.size() == ansatz.n_params();
}

CircuitParams random_initial_angles(const AnsatzSpec& ansatz, NoiseStream& stream) {
  CircuitParams p = CircuitParams::zeros(ansatz);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (auto& x : p.angles) x = stream.uniform(-kTwoPi, kTwoPi);
  return p;
}

CircuitRun execute_circuit(const StateVector& psi0, const AnsatzSpec& ansatz, const CircuitParams& params,
                           const NoiseRealization* noise) {
  ansatz.validate();
  if (!params.matches(ansatz)) throw InputError("circuit parameters do not match the ansatz shape");
  if (psi0.n_qubits() != ansatz.n_qubits) throw InputError("initial state and ansatz qubit counts differ");
  if (noise && (noise->shape != params.shape() || noise->increments.size() != params.angles.size())) {
    throw InputError("noise realization does not match the circuit parameter shape");
  }

  CircuitRun run{psi0, 0};
  for (int l = 0; l < ansatz.n_layers; ++l) {
    for (int m = 0; m < ansatz.rotations_per_layer(); ++m) {
      const Axis axis = ansatz.slot_axes[static_cast<std::size_t>(m)];
      for (int q = 0; q < ansatz.n_qubits; ++q) {
        const std::size_t i = params.index(l, m, q);
        const double angle = params.angles[i] + (noise ? noise->increments[i] : 0.0);
        rotate_in_place(run.state, q, axis, angle);
        ++run.gates_applied;
      }
    }
    apply_phases_in_place(run.state, ansatz.entangler_phases);
    ++run.gates_applied;
  }
  return run;
}

StateVector run_randomized_circuit(const StateVector& psi0, const AnsatzSpec& ansatz, const CircuitParams& params,
                                   const NoiseRealization& noise) {
  return execute_circuit(psi0, ansatz, params, &noise).state;
}

StateVector integrate_sse(const StateVector& psi0, std::span<const double> drift_diag,
                          const PulseSchedule& schedule, std::span<const ControlChannel> channels,
                          const WienerPath& path) {
  if (drift_diag.size() != psi0.dim()) throw InputError("drift diagonal length does not match the state");
  if (static_cast<int>(channels.size()) != schedule.n_channels() || path.n_channels != schedule.n_channels()) {
    throw InputError("channel count mismatch between schedule, channels and Wiener path");
  }
  if (path.step_sizes.size() != static_cast<std::size_t>(schedule.n_segments())) {
    throw InputError("Wiener path segment count does not match the schedule");
  }
  for (const auto& ch : channels) {
    if (ch.qubit < 0 || ch.qubit >= psi0.n_qubits()) throw InputError("control channel qubit out of range");
  }

  StateVector psi = psi0;
  auto amp = psi.amplitudes();
  std::vector<Complex> step_phase(psi.dim());
  const auto n_c = static_cast<std::size_t>(path.n_channels);
  std::size_t step = 0;
  for (int k = 0; k < schedule.n_segments(); ++k) {
    const double dt = path.step_sizes[static_cast<std::size_t>(k)];
    if (std::abs(dt * path.substeps - schedule.segment_length(k)) > 1e-9 * schedule.segment_length(k)) {
      throw InputError("Wiener path step does not divide segment " + std::to_string(k));
    }
    for (std::size_t i = 0; i < step_phase.size(); ++i) step_phase[i] = std::polar(1.0, -drift_diag[i] * dt);

    for (int s = 0; s < path.substeps; ++s, ++step) {
      for (std::size_t i = 0; i < amp.size(); ++i) amp[i] *= step_phase[i];
      for (std::size_t a = 0; a < n_c; ++a) {
        const double generator_angle = schedule.value(k, static_cast<int>(a)) * dt + path.increments[step * n_c + a];
        // exp(-i sigma x) is a rotation by angle 2x in the sigma/2 convention.
        rotate_in_place(psi, channels[a].qubit, channels[a].axis, 2.0 * generator_angle);
      }
      const double nrm = psi.norm();
      if (std::abs(nrm - 1.0) > 1e-6) {
        throw IntegrationError("SSE step changed the norm by " + std::to_string(nrm - 1.0));
      }
      for (auto& z : amp) z /= nrm;
    }
  }
  return psi;
}

}  // namespace piqc
