#include "piqc/ais.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "piqc/errors.hpp"

namespace piqc {

void AnnealingSchedule::validate() const {
  if (!(d_init >= 0.0) || !(d_final >= 0.0) || !std::isfinite(d_init) || !std::isfinite(d_final)) {
    throw InputError("annealing endpoints must be finite and non-negative");
  }
  if ((d_init == 0.0) != (d_final == 0.0)) {
    throw InputError("an exponential schedule cannot connect zero and non-zero noise");
  }
  if (n_d < 1 || n_s < 1) throw InputError("annealing needs n_d >= 1 and n_s >= 1");
}

double annealing_value(int j, const AnnealingSchedule& schedule) {
  schedule.validate();
  if (j < 0 || j >= schedule.n_d) {
    throw InputError("annealing index " + std::to_string(j) + " outside [0, " + std::to_string(schedule.n_d) + ")");
  }
  if (schedule.n_d == 1 || schedule.d_init == schedule.d_final) return schedule.d_init;
  if (j == schedule.n_d - 1) return schedule.d_final;
  const double frac = static_cast<double>(j) / static_cast<double>(schedule.n_d - 1);
  return schedule.d_init * std::pow(schedule.d_final / schedule.d_init, frac);
}

std::vector<double> ais_weights(std::span<const double> costs, double lambda) {
  if (costs.empty()) throw InputError("importance weights need at least one cost");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InputError("lambda must be finite and positive");
  for (double s : costs)
    if (!std::isfinite(s)) throw InputError("non-finite stochastic cost");

  const double smin = *std::min_element(costs.begin(), costs.end());
  std::vector<double> w(costs.size());
  double total = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    w[i] = std::exp(-(costs[i] - smin) / lambda);
    total += w[i];
  }
  for (auto& x : w) x /= total;
  return w;
}

namespace {

std::vector<double> weights_for(std::span<const TrajectoryRecord> trajectories, double lambda) {
  if (trajectories.empty()) throw InputError("AIS update needs at least one trajectory");
  if (lambda == 0.0) return std::vector<double>(trajectories.size(), 1.0 / static_cast<double>(trajectories.size()));
  std::vector<double> costs;
  costs.reserve(trajectories.size());
  for (const auto& t : trajectories) costs.push_back(t.stochastic_cost);
  return ais_weights(costs, lambda);
}

}  // namespace

PulseSchedule ais_update_pulse(const PulseSchedule& controls, std::span<const TrajectoryRecord> trajectories,
                               double lambda) {
  const auto w = weights_for(trajectories, lambda);
  const std::vector<std::size_t> shape{static_cast<std::size_t>(controls.n_segments()),
                                       static_cast<std::size_t>(controls.n_channels())};
  PulseSchedule next = controls;
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const auto& noise = trajectories[i].noise;
    if (noise.shape != shape || noise.increments.size() != controls.values().size()) {
      throw InputError("trajectory " + std::to_string(i) + " noise shape does not match the pulse schedule");
    }
  }
  for (int k = 0; k < controls.n_segments(); ++k) {
    const double dt = controls.segment_length(k);
    for (int a = 0; a < controls.n_channels(); ++a) {
      const auto idx = static_cast<std::size_t>(k * controls.n_channels() + a);
      double acc = 0.0;
      for (std::size_t i = 0; i < trajectories.size(); ++i) acc += w[i] * trajectories[i].noise.increments[idx];
      next.value(k, a) += acc / dt;
    }
  }
  return next;
}

CircuitParams ais_update_gate(const CircuitParams& theta, std::span<const TrajectoryRecord> trajectories,
                              double lambda) {
  const auto w = weights_for(trajectories, lambda);
  const auto shape = theta.shape();
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const auto& noise = trajectories[i].noise;
    if (noise.shape != shape || noise.increments.size() != theta.angles.size()) {
      throw InputError("trajectory " + std::to_string(i) + " noise shape does not match the circuit parameters");
    }
  }
  CircuitParams next = theta;
  for (std::size_t p = 0; p < next.angles.size(); ++p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < trajectories.size(); ++i) acc += w[i] * trajectories[i].noise.increments[p];
    next.angles[p] += acc;
  }
  return next;
}

Eigen::MatrixXd basis_ais_update(const Eigen::MatrixXd& coefficients, const Eigen::MatrixXd& gram,
                                 const Eigen::MatrixXd& weighted_noise) {
  if (gram.rows() != gram.cols() || gram.rows() != coefficients.cols() ||
      weighted_noise.rows() != coefficients.rows() || weighted_noise.cols() != coefficients.cols()) {
    throw InputError("basis AIS update: inconsistent matrix shapes");
  }
  // C B^{-1} = (B^{-1} C^T)^T, B symmetric positive definite.
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const auto pivots = ldlt.vectorD();
  if (ldlt.info() != Eigen::Success || !(pivots.minCoeff() > 1e-14 * pivots.cwiseAbs().maxCoeff())) {
    throw InputError("basis Gram matrix is not positive definite");
  }
  return coefficients + ldlt.solve(weighted_noise.transpose()).transpose();
}

Eigen::MatrixXd indicator_gram(std::span<const double> bounds) {
  if (bounds.size() < 2) throw InputError("indicator Gram matrix needs at least one segment");
  const auto k = static_cast<Eigen::Index>(bounds.size() - 1);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    b(i, i) = bounds[static_cast<std::size_t>(i) + 1] - bounds[static_cast<std::size_t>(i)];
  }
  return b;
}

Eigen::MatrixXd indicator_weighted_noise(std::span<const TrajectoryRecord> trajectories,
                                         std::span<const double> weights, int n_segments, int n_channels) {
  if (weights.size() != trajectories.size()) throw InputError("one weight per trajectory is required");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n_channels, n_segments);
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const auto& inc = trajectories[i].noise.increments;
    if (inc.size() != static_cast<std::size_t>(n_segments) * static_cast<std::size_t>(n_channels)) {
      throw InputError("trajectory noise does not match the requested shape");
    }
    for (int k = 0; k < n_segments; ++k)
      for (int a = 0; a < n_channels; ++a) c(a, k) += weights[i] * inc[static_cast<std::size_t>(k * n_channels + a)];
  }
  return c;
}

}  // namespace piqc
