#include "piqc/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "piqc/eigensolver.hpp"
#include "piqc/errors.hpp"

namespace piqc {

namespace {

int steps_for_segment(double length, double dt) {
  const double ratio = length / dt;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw InputError("integration step " + std::to_string(dt) + " does not divide segment length " +
                     std::to_string(length));
  }
  return static_cast<int>(rounded);
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  if (entries_.rows() != dim || entries_.cols() != dim) throw InputError("density matrix shape mismatch");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.dim()));
  return DensityMatrix(psi.n_qubits(), v * v.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd h = 0.5 * (entries_ + entries_.adjoint());
  return jacobi_eigensolve(h).eigenvalues.front();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.n_qubits() != b.n_qubits()) throw InputError("trace distance between different dimensions");
  Eigen::MatrixXcd diff = a.entries() - b.entries();
  diff = 0.5 * (diff + diff.adjoint());
  double sum = 0.0;
  for (double lambda : jacobi_eigensolve(diff).eigenvalues) sum += std::abs(lambda);
  return 0.5 * sum;
}

DensityMatrix lindblad_propagate(const DensityMatrix& rho0, const PauliSum& h0, const PulseSchedule& controls,
                                 std::span<const PauliTerm> control_ops, double noise, double dt) {
  const int n = rho0.n_qubits();
  if (h0.n_qubits() != n) throw InputError("drift Hamiltonian and density matrix qubit counts differ");
  if (static_cast<int>(control_ops.size()) != controls.n_channels()) {
    throw InputError("one control operator per schedule channel is required");
  }
  if (!(noise >= 0.0)) throw InputError("noise strength D must be non-negative");

  const Eigen::MatrixXcd drift = to_dense(h0);
  std::vector<Eigen::MatrixXcd> ops, ops_sq;
  for (const auto& op : control_ops) {
    ops.push_back(to_dense(op, n));
    ops_sq.push_back(ops.back() * ops.back());
  }
  constexpr Complex kI{0.0, 1.0};

  Eigen::MatrixXcd rho = rho0.entries();
  double smallest_dt = std::numeric_limits<double>::infinity();
  for (int k = 0; k < controls.n_segments(); ++k) {
    const double length = controls.segment_length(k);
    const double h = dt > 0.0 ? dt : length / 100.0;
    const int steps = steps_for_segment(length, h);
    smallest_dt = std::min(smallest_dt, h);

    Eigen::MatrixXcd ham = drift;
    for (std::size_t a = 0; a < ops.size(); ++a) ham += controls.value(k, static_cast<int>(a)) * ops[a];

    const auto generator = [&](const Eigen::MatrixXcd& r) {
      Eigen::MatrixXcd out = -kI * (ham * r - r * ham);
      if (noise > 0.0) {
        for (std::size_t a = 0; a < ops.size(); ++a) {
          out += noise * (ops[a] * r * ops[a] - 0.5 * (ops_sq[a] * r + r * ops_sq[a]));
        }
      }
      return out;
    };

    for (int s = 0; s < steps; ++s) {
      const Eigen::MatrixXcd k1 = generator(rho);
      const Eigen::MatrixXcd k2 = generator(rho + 0.5 * h * k1);
      const Eigen::MatrixXcd k3 = generator(rho + 0.5 * h * k2);
      const Eigen::MatrixXcd k4 = generator(rho + h * k3);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }

  DensityMatrix out(n, std::move(rho));
  const double herm = out.hermiticity_error();
  const double trace_err = std::abs(out.trace() - 1.0);
  const double min_eig = out.min_eigenvalue();
  const double positivity_floor = -1e-9 - 10.0 * std::pow(smallest_dt, 4);
  if (herm > 1e-10 || trace_err > 1e-10 || min_eig < positivity_floor) {
    throw IntegrationError("Lindblad step too coarse: hermiticity error " + std::to_string(herm) +
                           ", trace error " + std::to_string(trace_err) + ", min eigenvalue " +
                           std::to_string(min_eig));
  }
  return out;
}

}  // namespace piqc
