#include "piqc/models.hpp"

#include <cmath>
#include <string>

#include "piqc/errors.hpp"

namespace piqc {

std::vector<double> build_drift_hamiltonian(const DriftSpec& spec) {
  if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits) throw InputError("drift: qubit count out of range");
  if (!(spec.spacing > 0.0) || !std::isfinite(spec.spacing)) throw InputError("drift: spacing must be positive");
  if (!std::isfinite(spec.c6)) throw InputError("drift: c6 must be finite");

  const int n = spec.n_qubits;
  std::vector<double> pair(static_cast<std::size_t>(n), 0.0);  // by distance |i-j|
  for (int d = 1; d < n; ++d) pair[static_cast<std::size_t>(d)] = spec.c6 / std::pow(spec.spacing * d, 6);

  std::vector<double> diag(std::size_t{1} << n, 0.0);
  for (std::size_t k = 0; k < diag.size(); ++k) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!((k >> i) & 1U)) continue;
      for (int j = i + 1; j < n; ++j)
        if ((k >> j) & 1U) e += pair[static_cast<std::size_t>(j - i)];
    }
    diag[k] = e;
  }
  return diag;
}

PauliSum build_tfim(int n, double j_coupling, double h_field) {
  if (n < 1) throw InputError("TFIM needs at least one site");
  PauliSum h(n);
  for (int i = 0; i + 1 < n; ++i) {
    std::string axes(static_cast<std::size_t>(n), 'I');
    axes[static_cast<std::size_t>(i)] = 'Z';
    axes[static_cast<std::size_t>(i) + 1] = 'Z';
    h.add(-j_coupling, std::move(axes));
  }
  for (int i = 0; i < n; ++i) {
    std::string axes(static_cast<std::size_t>(n), 'I');
    axes[static_cast<std::size_t>(i)] = 'X';
    h.add(-h_field, std::move(axes));
  }
  return h;
}

}  // namespace piqc
