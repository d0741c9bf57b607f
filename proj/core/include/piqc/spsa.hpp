#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "piqc/piqc.hpp"
#include "piqc/trace.hpp"

namespace piqc {

/// Fixed (non-decaying) learning rate a and perturbation c.
struct SPSAConfig {
  double learning_rate = 1e-3;
  double perturbation = 5e-5;
  int iterations = 100;
  std::uint64_t master_seed = 0;

  void validate() const;
};

using EnergyFunction = std::function<double(std::span<const double>)>;

/// g = [E(theta + c delta) - E(theta - c delta)] / (2c) * delta^{-1}; two
/// energy evaluations.
std::vector<double> spsa_gradient_estimate(const EnergyFunction& energy, std::span<const double> theta, double c,
                                           std::span<const int> delta);

/// theta <- theta - a g for `iterations` steps with Rademacher directions.
/// Rows record min/mean/max of the two evaluated energies; q_eval grows by 2.
OptimizationTrace minimize_spsa(const EnergyFunction& energy, std::vector<double> theta0, const SPSAConfig& config);

/// SPSA on the noise-free circuit energy of `problem`.
OptimizationTrace run_spsa(const GateProblem& problem, const SPSAConfig& config);

}  // namespace piqc
