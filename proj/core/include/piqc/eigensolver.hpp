#pragma once

#include <vector>

#include <Eigen/Dense>

#include "piqc/pauli.hpp"
#include "piqc/state_vector.hpp"

namespace piqc {

/// Result of a full Hermitian eigendecomposition: ascending eigenvalues and
/// the matching unit eigenvectors as columns.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  int sweeps = 0;
};

/// Cyclic complex Jacobi. Iterates until the off-diagonal Frobenius norm is at
/// most `relative_tolerance * ||A||_F`. The input must be Hermitian.
HermitianEigen jacobi_eigensolve(const Eigen::MatrixXcd& matrix, double relative_tolerance = 1e-12,
                                 int max_sweeps = 100);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  StateVector ground_vector;

  double ground_energy() const { return eigenvalues.front(); }
};

inline constexpr int kMaxDenseQubits = 12;

/// Dense exact diagonalization of `h`. For degenerate ground levels the vector
/// is whichever one the solver lands on.
Spectrum exact_ground_state(const PauliSum& h);

}  // namespace piqc
