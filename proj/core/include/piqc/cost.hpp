#pragma once

#include "piqc/dynamics.hpp"
#include "piqc/noise.hpp"
#include "piqc/pauli.hpp"
#include "piqc/pulse_schedule.hpp"

namespace piqc {

/// End-cost weight Q and control penalty R (scalar R, noise D * identity).
struct CostWeights {
  double q = 2.0e4;
  double r = 1.0;
};

/// S = (Q/2) E + sum_k R |u_k|^2 dt_k / 2 + sum_k R u_k . dW_k / 2.
double stochastic_cost(double energy, const PulseSchedule& controls, const NoiseRealization& noise,
                       const CostWeights& weights);

/// S = (Q/2) E + (R/2) theta.theta + (R/2) theta.dW.
double stochastic_cost(double energy, const CircuitParams& theta, const NoiseRealization& noise,
                       const CostWeights& weights);

/// Same, with E = <final_state|h|final_state>.
template <class Controls>
double stochastic_cost(const StateVector& final_state, const PauliSum& h, const Controls& controls,
                       const NoiseRealization& noise, const CostWeights& weights) {
  return stochastic_cost(expectation(final_state, h), controls, noise, weights);
}

/// Control-penalty part of C[u] without the Ito term: sum_k R |u_k|^2 dt_k / 2.
double fluence(const PulseSchedule& controls, double r_weight);

}  // namespace piqc
