#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "piqc/state_vector.hpp"

namespace piqc {

/// Rotation / control axis of a single-qubit Pauli.
enum class Axis { X, Y, Z };

char axis_label(Axis axis) noexcept;
Axis parse_axis(char label);

/// coefficient * (P_0 (x) P_1 (x) ... ), where axes[q] in {I,X,Y,Z} acts on qubit q.
struct PauliTerm {
  double coefficient = 1.0;
  std::string axes;

  bool operator==(const PauliTerm&) const = default;
};

/// Bit-mask form of a Pauli string: P|k> = i^n_y (-1)^popcount(k & phase_mask) |k ^ flip_mask>.
struct PauliMask {
  std::uint64_t flip_mask = 0;   // X or Y
  std::uint64_t phase_mask = 0;  // Y or Z
  int n_y = 0;

  static PauliMask from_axes(std::string_view axes);
};

/// Hermitian operator sum_t c_t P_t with real coefficients.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  void add(PauliTerm term);
  void add(double coefficient, std::string axes) { add(PauliTerm{coefficient, std::move(axes)}); }

  int n_qubits() const noexcept { return n_qubits_; }
  std::span<const PauliTerm> terms() const noexcept { return terms_; }
  std::span<const PauliMask> masks() const noexcept { return masks_; }

  /// Sum of |c_t|, an upper bound on the spectral norm.
  double coefficient_l1() const noexcept;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
  std::vector<PauliMask> masks_;
};

/// coefficient * P |state>. The input is left untouched.
StateVector apply_pauli_term(const StateVector& state, const PauliTerm& term);

/// <state|h|state>. Throws ConsistencyError if the raw sum has an imaginary
/// part above 1e-10 (scaled by max(1, coefficient_l1)).
double expectation(const StateVector& state, const PauliSum& h);

/// exp(-i angle sigma/2) on `qubit`.
StateVector apply_rotation(StateVector state, int qubit, Axis axis, double angle);
void rotate_in_place(StateVector& state, int qubit, Axis axis, double angle);

/// z_k <- exp(-i phases[k]) z_k.
StateVector apply_diagonal_unitary(StateVector state, std::span<const double> phases);
void apply_phases_in_place(StateVector& state, std::span<const double> phases);

/// Dense 2^n x 2^n matrix. Intended for oracles and exact diagonalization.
Eigen::MatrixXcd to_dense(const PauliSum& h);
Eigen::MatrixXcd to_dense(const PauliTerm& term, int n_qubits);

}  // namespace piqc
