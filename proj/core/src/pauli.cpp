#include "piqc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "piqc/errors.hpp"

namespace piqc {

namespace {


Complex i_power(int n) {
  switch (n & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw InputError("qubit index " + std::to_string(qubit) + " out of range for " +
                     std::to_string(state.n_qubits()) + "-qubit state");
  }
}

}  // namespace

char axis_label(Axis axis) noexcept {
  switch (axis) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

Axis parse_axis(char label) {
  switch (label) {
    case 'X': case 'x': return Axis::X;
    case 'Y': case 'y': return Axis::Y;
    case 'Z': case 'z': return Axis::Z;
    default: throw InputError(std::string("unknown rotation axis '") + label + "'");
  }
}

PauliMask PauliMask::from_axes(std::string_view axes) {
  PauliMask m;
  for (std::size_t q = 0; q < axes.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (axes[q]) {
      case 'I': break;
      case 'X': m.flip_mask |= bit; break;
      case 'Y': m.flip_mask |= bit; m.phase_mask |= bit; ++m.n_y; break;
      case 'Z': m.phase_mask |= bit; break;
      default:
        throw InputError(std::string("invalid Pauli label '") + axes[q] + "' in \"" + std::string(axes) + "\"");
    }
  }
  return m;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("PauliSum qubit count out of range");
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms) : PauliSum(n_qubits) {
  terms_.reserve(terms.size());
  for (auto& t : terms) add(std::move(t));
}

void PauliSum::add(PauliTerm term) {
  if (static_cast<int>(term.axes.size()) != n_qubits_) {
    throw InputError("Pauli string \"" + term.axes + "\" has length " + std::to_string(term.axes.size()) +
                     ", expected " + std::to_string(n_qubits_));
  }
  if (!std::isfinite(term.coefficient)) throw InputError("non-finite Pauli coefficient");
  masks_.push_back(PauliMask::from_axes(term.axes));
  terms_.push_back(std::move(term));
}

double PauliSum::coefficient_l1() const noexcept {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

StateVector apply_pauli_term(const StateVector& state, const PauliTerm& term) {
  if (static_cast<int>(term.axes.size()) != state.n_qubits()) {
    throw InputError("Pauli string length does not match the state's qubit count");
  }
  const PauliMask m = PauliMask::from_axes(term.axes);
  const Complex global = term.coefficient * i_power(m.n_y);
  StateVector out(state.n_qubits());
  auto src = state.amplitudes();
  auto dst = out.amplitudes();
  for (std::uint64_t k = 0; k < src.size(); ++k) {
    const double sign = (std::popcount(k & m.phase_mask) & 1) ? -1.0 : 1.0;
    dst[k ^ m.flip_mask] = global * sign * src[k];
  }
  return out;
}

double expectation(const StateVector& state, const PauliSum& h) {
  if (state.n_qubits() != h.n_qubits()) throw InputError("state and Hamiltonian qubit counts differ");
  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-8) throw InputError("expectation requires a normalized state");

  auto amp = state.amplitudes();
  const auto terms = h.terms();
  const auto masks = h.masks();
  Complex total = 0.0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const PauliMask& m = masks[t];
    Complex acc = 0.0;
    for (std::uint64_t k = 0; k < amp.size(); ++k) {
      const Complex v = std::conj(amp[k ^ m.flip_mask]) * amp[k];
      acc += (std::popcount(k & m.phase_mask) & 1) ? -v : v;
    }
    total += terms[t].coefficient * i_power(m.n_y) * acc;
  }
  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, h.coefficient_l1())) {
    throw ConsistencyError("expectation value has imaginary part " + std::to_string(total.imag()));
  }
  return total.real();
}

void rotate_in_place(StateVector& state, int qubit, Axis axis, double angle) {
  check_qubit(state, qubit);
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  auto amp = state.amplitudes();

  switch (axis) {
    case Axis::X: {
      // [[c, -is], [-is, c]]
      const Complex mis{0.0, -s};
      for (std::uint64_t k = 0; k < amp.size(); ++k) {
        if (k & bit) continue;
        const Complex a0 = amp[k], a1 = amp[k | bit];
        amp[k] = c * a0 + mis * a1;
        amp[k | bit] = mis * a0 + c * a1;
      }
      break;
    }
    case Axis::Y: {
      // [[c, -s], [s, c]]
      for (std::uint64_t k = 0; k < amp.size(); ++k) {
        if (k & bit) continue;
        const Complex a0 = amp[k], a1 = amp[k | bit];
        amp[k] = c * a0 - s * a1;
        amp[k | bit] = s * a0 + c * a1;
      }
      break;
    }
    case Axis::Z: {
      const Complex p0{c, -s}, p1{c, s};
      for (std::uint64_t k = 0; k < amp.size(); ++k) amp[k] *= (k & bit) ? p1 : p0;
      break;
    }
  }
}

StateVector apply_rotation(StateVector state, int qubit, Axis axis, double angle) {
  rotate_in_place(state, qubit, axis, angle);
  return state;
}

void apply_phases_in_place(StateVector& state, std::span<const double> phases) {
  if (phases.size() != state.dim()) {
    throw InputError("phase vector length " + std::to_string(phases.size()) + " does not match dimension " +
                     std::to_string(state.dim()));
  }
  auto amp = state.amplitudes();
  for (std::size_t k = 0; k < amp.size(); ++k) {
    if (phases[k] != 0.0) amp[k] *= std::polar(1.0, -phases[k]);
  }
}

StateVector apply_diagonal_unitary(StateVector state, std::span<const double> phases) {
  apply_phases_in_place(state, phases);
  return state;
}

Eigen::MatrixXcd to_dense(const PauliTerm& term, int n_qubits) {
  if (static_cast<int>(term.axes.size()) != n_qubits) throw InputError("Pauli string length mismatch");
  const PauliMask m = PauliMask::from_axes(term.axes);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const Complex global = term.coefficient * i_power(m.n_y);
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(dim); ++k) {
    const double sign = (std::popcount(k & m.phase_mask) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(k ^ m.flip_mask), static_cast<Eigen::Index>(k)) += global * sign;
  }
  return out;
}

Eigen::MatrixXcd to_dense(const PauliSum& h) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << h.n_qubits());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) out += to_dense(t, h.n_qubits());
  return out;
}

}  // namespace piqc
