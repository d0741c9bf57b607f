#include "piqc/piqc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "piqc/errors.hpp"

namespace piqc {

void AISConfig::validate() const {
  if (!(q_weight > 0.0) || !std::isfinite(q_weight)) throw InputError("Q must be finite and positive");
  if (!(r_weight > 0.0) || !std::isfinite(r_weight)) throw InputError("R must be finite and positive");
  if (n_traj < 2) throw InputError("importance sampling needs at least two trajectories per step");
}

TrajectoryRecord sample_gate_trajectory(const GateProblem& problem, const CircuitParams& theta, double noise,
                                        const CostWeights& weights, NoiseStream& stream) {
  TrajectoryRecord rec{sample_noise(problem.ansatz, noise, stream), problem.initial_state, 0.0, 0.0};
  rec.final_state = run_randomized_circuit(problem.initial_state, problem.ansatz, theta, rec.noise);
  rec.energy = expectation(rec.final_state, problem.hamiltonian);
  rec.stochastic_cost = stochastic_cost(rec.energy, theta, rec.noise, weights);
  return rec;
}

TrajectoryRecord sample_pulse_trajectory(const PulseProblem& problem, const PulseSchedule& controls, double noise,
                                         const CostWeights& weights, NoiseStream& stream) {
  const WienerPath path = sample_wiener_path(controls, problem.substeps, noise, stream);
  TrajectoryRecord rec{coarse_increments(path), problem.initial_state, 0.0, 0.0};
  rec.noise.seed_id = stream.key();
  rec.final_state = integrate_sse(problem.initial_state, problem.drift_diag, controls, problem.channels, path);
  rec.energy = expectation(rec.final_state, problem.hamiltonian);
  rec.stochastic_cost = stochastic_cost(rec.energy, controls, rec.noise, weights);
  return rec;
}

namespace {

// Shared annealing loop. `Controls` is CircuitParams or PulseSchedule.
template <class Controls, class Sample, class Update, class Values, class Deterministic>
OptimizationTrace anneal(std::string algorithm, Controls controls, const AnnealingSchedule& schedule,
                         const AISConfig& config, Sample sample, Update update, Values values,
                         Deterministic deterministic_energy) {
  schedule.validate();
  config.validate();

  OptimizationTrace trace;
  trace.algorithm = std::move(algorithm);
  trace.rows.reserve(schedule.total_iterations());

  const auto n_traj = static_cast<std::size_t>(config.n_traj);
  std::vector<TrajectoryRecord> records;
  records.reserve(n_traj);
  std::uint64_t iteration = 0, q_eval = 0;
  std::vector<double> last_energies;

  const auto fail = [&](const std::string& why) {
    trace.diverged = true;
    trace.diagnostic = why;
  };

  for (int j = 0; j < schedule.n_d && !trace.diverged; ++j) {
    const double noise = annealing_value(j, schedule);
    const double lambda = config.lambda(noise);
    for (int p = 0; p < schedule.n_s; ++p, ++iteration) {
      records.clear();
      for (std::size_t i = 0; i < n_traj; ++i) {
        NoiseStream stream(config.master_seed, iteration * n_traj + i,
                           static_cast<std::uint64_t>(StreamDomain::trajectory));
        records.push_back(sample(controls, noise, stream));
      }
      q_eval += n_traj;

      TraceRow row{iteration, noise, lambda, std::numeric_limits<double>::infinity(),
                   0.0, -std::numeric_limits<double>::infinity(), q_eval};
      last_energies.clear();
      bool finite = true;
      for (const auto& r : records) {
        row.energy_min = std::min(row.energy_min, r.energy);
        row.energy_max = std::max(row.energy_max, r.energy);
        row.energy_mean += r.energy;
        last_energies.push_back(r.energy);
        finite = finite && std::isfinite(r.stochastic_cost) && std::isfinite(r.energy);
      }
      row.energy_mean /= static_cast<double>(n_traj);
      trace.rows.push_back(row);

      if (!finite) {
        std::ostringstream os;
        os << "non-finite stochastic cost at iteration " << iteration << " (D = " << noise << ")";
        fail(os.str());
        break;
      }
      controls = update(controls, records, lambda);
      const auto v = values(controls);
      const bool bounded = std::all_of(v.begin(), v.end(), [](double x) {
        return std::isfinite(x) && std::abs(x) <= kDivergenceBound;
      });
      if (!bounded) {
        std::ostringstream os;
        os << "controls left [-" << kDivergenceBound << ", " << kDivergenceBound << "] at iteration " << iteration;
        fail(os.str());
        break;
      }
    }
  }

  const auto v = values(controls);
  trace.final_controls.assign(v.begin(), v.end());
  if (!last_energies.empty()) {
    trace.final_energy = *std::min_element(last_energies.begin(), last_energies.end());
  }
  trace.deterministic_final_energy = trace.diverged ? std::numeric_limits<double>::quiet_NaN()
                                                    : deterministic_energy(controls);
  return trace;
}

}  // namespace

OptimizationTrace run_piqc(const GateProblem& problem, const AnnealingSchedule& schedule, const AISConfig& config) {
  problem.ansatz.validate();
  if (problem.hamiltonian.n_qubits() != problem.ansatz.n_qubits ||
      problem.initial_state.n_qubits() != problem.ansatz.n_qubits) {
    throw InputError("problem, initial state and ansatz qubit counts differ");
  }
  if (!problem.initial_params.matches(problem.ansatz)) throw InputError("initial angles do not match the ansatz");

  const CostWeights weights = config.weights();
  auto trace = anneal(
      "piqc-gate", problem.initial_params, schedule, config,
      [&](const CircuitParams& theta, double noise, NoiseStream& stream) {
        return sample_gate_trajectory(problem, theta, noise, weights, stream);
      },
      [](const CircuitParams& theta, const std::vector<TrajectoryRecord>& recs, double lambda) {
        return ais_update_gate(theta, recs, lambda);
      },
      [](const CircuitParams& theta) { return std::span<const double>(theta.angles); },
      [&](const CircuitParams& theta) {
        return expectation(execute_circuit(problem.initial_state, problem.ansatz, theta).state, problem.hamiltonian);
      });
  trace.control_shape = problem.initial_params.shape();
  return trace;
}

OptimizationTrace run_piqc(const PulseProblem& problem, const AnnealingSchedule& schedule, const AISConfig& config) {
  const int n = problem.hamiltonian.n_qubits();
  if (problem.initial_state.n_qubits() != n || problem.drift_diag.size() != problem.initial_state.dim()) {
    throw InputError("problem, initial state and drift dimensions differ");
  }
  if (static_cast<int>(problem.channels.size()) != problem.initial_controls.n_channels()) {
    throw InputError("one control channel per schedule column is required");
  }

  const CostWeights weights = config.weights();
  auto trace = anneal(
      "piqc-pulse", problem.initial_controls, schedule, config,
      [&](const PulseSchedule& u, double noise, NoiseStream& stream) {
        return sample_pulse_trajectory(problem, u, noise, weights, stream);
      },
      [](const PulseSchedule& u, const std::vector<TrajectoryRecord>& recs, double lambda) {
        return ais_update_pulse(u, recs, lambda);
      },
      [](const PulseSchedule& u) { return u.values(); },
      [&](const PulseSchedule& u) {
        NoiseStream unused(0, 0);
        const WienerPath still = sample_wiener_path(u, problem.substeps, 0.0, unused);
        return expectation(integrate_sse(problem.initial_state, problem.drift_diag, u, problem.channels, still),
                           problem.hamiltonian);
      });
  trace.control_shape = {static_cast<std::size_t>(problem.initial_controls.n_segments()),
                         static_cast<std::size_t>(problem.initial_controls.n_channels())};
  return trace;
}

}  // namespace piqc
