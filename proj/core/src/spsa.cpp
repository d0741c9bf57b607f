#include "piqc/spsa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "piqc/errors.hpp"

namespace piqc {

void SPSAConfig::validate() const {
  // a = 0 is accepted: it freezes the parameters, which is useful as a baseline.
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) throw InputError("SPSA learning rate must be >= 0");
  if (!(perturbation > 0.0) || !std::isfinite(perturbation)) throw InputError("SPSA perturbation must be > 0");
  if (iterations < 0) throw InputError("SPSA iteration count must be >= 0");
}

std::vector<double> spsa_gradient_estimate(const EnergyFunction& energy, std::span<const double> theta, double c,
                                           std::span<const int> delta) {
  if (!(c > 0.0)) throw InputError("SPSA perturbation must be > 0");
  if (delta.size() != theta.size()) throw InputError("perturbation direction has the wrong length");
  std::vector<double> plus(theta.begin(), theta.end()), minus(theta.begin(), theta.end());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (delta[i] != 1 && delta[i] != -1) throw InputError("SPSA directions must be +1 or -1");
    plus[i] += c * delta[i];
    minus[i] -= c * delta[i];
  }
  const double diff = (energy(plus) - energy(minus)) / (2.0 * c);
  std::vector<double> g(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) g[i] = diff / delta[i];
  return g;
}

OptimizationTrace minimize_spsa(const EnergyFunction& energy, std::vector<double> theta0, const SPSAConfig& config) {
  config.validate();
  OptimizationTrace trace;
  trace.algorithm = "spsa";
  trace.control_shape = {theta0.size()};
  trace.rows.reserve(static_cast<std::size_t>(config.iterations));

  std::vector<double> theta = std::move(theta0);
  std::vector<int> delta(theta.size());
  std::vector<double> plus(theta.size()), minus(theta.size());
  const double c = config.perturbation;
  std::uint64_t q_eval = 0;

  for (int j = 0; j < config.iterations; ++j) {
    NoiseStream stream(config.master_seed, static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(StreamDomain::spsa));
    for (auto& d : delta) d = stream.rademacher();
    for (std::size_t i = 0; i < theta.size(); ++i) {
      plus[i] = theta[i] + c * delta[i];
      minus[i] = theta[i] - c * delta[i];
    }
    // Same arithmetic as spsa_gradient_estimate, keeping both energies for the trace.
    const double e_plus = energy(plus);
    const double e_minus = energy(minus);
    q_eval += 2;
    trace.rows.push_back(TraceRow{static_cast<std::uint64_t>(j), std::nullopt, 0.0, std::min(e_plus, e_minus),
                                  0.5 * (e_plus + e_minus), std::max(e_plus, e_minus), q_eval});
    if (!std::isfinite(e_plus) || !std::isfinite(e_minus)) {
      std::ostringstream os;
      os << "non-finite energy at SPSA iteration " << j;
      trace.diverged = true;
      trace.diagnostic = os.str();
      break;
    }
    const double diff = (e_plus - e_minus) / (2.0 * c);
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= config.learning_rate * (diff / delta[i]);
  }

  trace.final_controls = theta;
  trace.final_energy = energy(theta);
  trace.deterministic_final_energy = trace.final_energy;
  return trace;
}

OptimizationTrace run_spsa(const GateProblem& problem, const SPSAConfig& config) {
  if (!problem.initial_params.matches(problem.ansatz)) throw InputError("initial angles do not match the ansatz");
  CircuitParams scratch = problem.initial_params;
  const EnergyFunction energy = [&](std::span<const double> angles) {
    std::copy(angles.begin(), angles.end(), scratch.angles.begin());
    return expectation(execute_circuit(problem.initial_state, problem.ansatz, scratch).state, problem.hamiltonian);
  };
  auto trace = minimize_spsa(energy, problem.initial_params.angles, config);
  trace.control_shape = problem.initial_params.shape();
  return trace;
}

}  // namespace piqc
