#include "piqc/cost.hpp"

#include "piqc/errors.hpp"

namespace piqc {

double stochastic_cost(double energy, const PulseSchedule& controls, const NoiseRealization& noise,
                       const CostWeights& weights) {
  if (noise.increments.size() != controls.values().size()) {
    throw InputError("noise realization does not match the pulse schedule shape");
  }
  double quad = 0.0, ito = 0.0;
  for (int k = 0; k < controls.n_segments(); ++k) {
    const double dt = controls.segment_length(k);
    for (int a = 0; a < controls.n_channels(); ++a) {
      const double u = controls.value(k, a);
      quad += u * u * dt;
      ito += u * noise.increments[static_cast<std::size_t>(k * controls.n_channels() + a)];
    }
  }
  return 0.5 * weights.q * energy + 0.5 * weights.r * quad + 0.5 * weights.r * ito;
}

double stochastic_cost(double energy, const CircuitParams& theta, const NoiseRealization& noise,
                       const CostWeights& weights) {
  if (noise.increments.size() != theta.angles.size()) {
    throw InputError("noise realization does not match the circuit parameter shape");
  }
  double quad = 0.0, ito = 0.0;
  for (std::size_t i = 0; i < theta.angles.size(); ++i) {
    quad += theta.angles[i] * theta.angles[i];
    ito += theta.angles[i] * noise.increments[i];
  }
  return 0.5 * weights.q * energy + 0.5 * weights.r * quad + 0.5 * weights.r * ito;
}

double fluence(const PulseSchedule& controls, double r_weight) {
  double quad = 0.0;
  for (int k = 0; k < controls.n_segments(); ++k)
    for (int a = 0; a < controls.n_channels(); ++a) quad += controls.value(k, a) * controls.value(k, a) * controls.segment_length(k);
  return 0.5 * r_weight * quad;
}

}  // namespace piqc
