#pragma once

#include <span>

#include <Eigen/Dense>

#include "piqc/pauli.hpp"
#include "piqc/pulse_schedule.hpp"
#include "piqc/state_vector.hpp"

namespace piqc {

/// Mixed state as a dense 2^n x 2^n matrix. Used as a reference for the
/// trajectory simulators, not on any optimization path.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, Eigen::MatrixXcd entries);

  static DensityMatrix pure(const StateVector& psi);

  int n_qubits() const noexcept { return n_qubits_; }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  Complex trace() const { return entries_.trace(); }
  double purity() const { return (entries_ * entries_).trace().real(); }
  double min_eigenvalue() const;
  double hermiticity_error() const { return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff(); }

 private:
  int n_qubits_;
  Eigen::MatrixXcd entries_;
};

/// Trace distance (1/2)||a - b||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Integrates
///   drho/dt = -i[h0 + sum_a u_a(t) H_a, rho] + D sum_a (H_a rho H_a - {H_a^2, rho}/2)
/// with classical RK4, one channel per entry of `control_ops` (scalar noise
/// matrix D * identity). `dt` must divide every segment; dt <= 0 selects
/// segment/100 per segment. Throws IntegrationError if the result is not a
/// valid density matrix within tolerance.
DensityMatrix lindblad_propagate(const DensityMatrix& rho0, const PauliSum& h0, const PulseSchedule& controls,
                                 std::span<const PauliTerm> control_ops, double noise, double dt = 0.0);

}  // namespace piqc
