#include "piqc/state_vector.hpp"

#include <cmath>
#include <string>

#include "piqc/errors.hpp"

namespace piqc {

namespace {

std::size_t checked_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw InputError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                     "], got " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amplitudes_(checked_dim(n_qubits)) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dim(n_qubits)) {
    throw InputError("amplitude count " + std::to_string(amplitudes_.size()) +
                     " does not match 2^" + std::to_string(n_qubits));
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw InputError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& z : amplitudes_) sum += std::norm(z);
  return std::sqrt(sum);
}

void StateVector::normalize() {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ConsistencyError("cannot normalize a zero or non-finite state");
  const double inv = 1.0 / n;
  for (auto& z : amplitudes_) z *= inv;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw InputError("inner product of states with different dimensions");
  Complex sum = 0.0;
  for (std::size_t k = 0; k < amplitudes_.size(); ++k) sum += std::conj(amplitudes_[k]) * other.amplitudes_[k];
  return sum;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.inner(b)); }

double distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw InputError("distance between states with different dimensions");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) sum += std::norm(a[k] - b[k]);
  return std::sqrt(sum);
}

}  // namespace piqc
