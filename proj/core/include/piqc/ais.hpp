#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "piqc/dynamics.hpp"
#include "piqc/pulse_schedule.hpp"

namespace piqc {

/// Exponential noise schedule D_j = d_init (d_final / d_init)^(j / (n_d - 1)),
/// with n_s AIS steps at each level.
struct AnnealingSchedule {
  double d_init = 2.5e-5;
  double d_final = 5e-16;
  int n_d = 64;
  int n_s = 100;

  /// Fixed noise level for `total_iterations` iterations.
  static AnnealingSchedule fixed(double noise, int n_d, int n_s) { return {noise, noise, n_d, n_s}; }

  std::uint64_t total_iterations() const noexcept {
    return static_cast<std::uint64_t>(n_d) * static_cast<std::uint64_t>(n_s);
  }
  void validate() const;
};

double annealing_value(int j, const AnnealingSchedule& schedule);

/// Normalized importance weights w_i = exp(-(S_i - min S)/lambda) / sum_k exp(-(S_k - min S)/lambda).
/// They sum to one, so sum_i w_i x_i estimates E[w x].
std::vector<double> ais_weights(std::span<const double> costs, double lambda);

/// u_{ak} += sum_i w_i dW^(i)_{ak} / dt_k. lambda == 0 (D == 0) uses uniform
/// weights; the increments are then all zero.
PulseSchedule ais_update_pulse(const PulseSchedule& controls, std::span<const TrajectoryRecord> trajectories,
                               double lambda);

/// theta += sum_i w_i dW^(i).
CircuitParams ais_update_gate(const CircuitParams& theta, std::span<const TrajectoryRecord> trajectories,
                              double lambda);

/// General basis-function form: for u_a(t) = sum_k A_ak h_k(t),
/// A <- A + C B^{-1} with B_kk' = int h_k h_k' dt and C_ak = E[w int h_k dW_a].
Eigen::MatrixXd basis_ais_update(const Eigen::MatrixXd& coefficients, const Eigen::MatrixXd& gram,
                                 const Eigen::MatrixXd& weighted_noise);

/// Gram matrix of indicator functions on the given segment bounds: diag(dt_k).
Eigen::MatrixXd indicator_gram(std::span<const double> bounds);

/// C_ak = sum_i w_i dW^(i)_{ak} for indicator bases (n_c x K).
Eigen::MatrixXd indicator_weighted_noise(std::span<const TrajectoryRecord> trajectories,
                                         std::span<const double> weights, int n_segments, int n_channels);

}  // namespace piqc
