#pragma once

#include <vector>

#include "piqc/pauli.hpp"

namespace piqc {

/// Rydberg chain: n atoms spaced r apart, van der Waals coefficient c6.
struct DriftSpec {
  int n_qubits = 1;
  double c6 = 0.1;
  double spacing = 1.0;
};

/// Diagonal of H0 = sum_{i<j} c6 / (r|i-j|)^6 |11><11|_{ij}; entry k sums over
/// pairs whose bits are both set in k. Units follow c6 (kHz by convention).
std::vector<double> build_drift_hamiltonian(const DriftSpec& spec);

/// Transverse-field Ising chain -j sum Z_i Z_{i+1} - h sum X_i (open boundary).
PauliSum build_tfim(int n, double j_coupling, double h_field);

}  // namespace piqc
