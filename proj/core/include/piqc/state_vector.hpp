#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace piqc {

using Complex = std::complex<double>;

/// Pure state of `n_qubits` qubits as 2^n complex amplitudes.
///
/// Basis index convention: qubit q is bit q of the index (little endian), so
/// the ket label |b0 b1 ... b(n-1)> has index sum_q b_q 2^q.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);
  /// Takes ownership of `amplitudes`; the length must be 2^n_qubits.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }
  Complex& operator[](std::size_t k) { return amplitudes_[k]; }

  double norm() const noexcept;
  void normalize();

  /// <this|other>.
  Complex inner(const StateVector& other) const;

  bool operator==(const StateVector&) const = default;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// |<a|b>|^2 for normalized inputs.
double fidelity(const StateVector& a, const StateVector& b);

/// Euclidean distance ||a - b||.
double distance(const StateVector& a, const StateVector& b);

/// Largest qubit count the library accepts for any state.
inline constexpr int kMaxQubits = 24;

}  // namespace piqc
