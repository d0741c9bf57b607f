#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "piqc/pauli.hpp"

namespace piqc::io {

/// Optional descriptive fields carried alongside a Pauli-sum problem.
struct ProblemMetadata {
  std::optional<std::string> molecule_name;
  std::optional<double> bond_distance_angstrom;
  std::optional<double> reference_ground_energy;
  /// Computational-basis start state as a label b0 b1 ... (qubit 0 first).
  std::optional<std::string> initial_state;

  bool operator==(const ProblemMetadata&) const = default;
};

struct Problem {
  PauliSum hamiltonian{1};
  ProblemMetadata metadata;
};

/// Parses the JSON problem document
///
///   { "n_qubits": 2,
///     "terms": [ {"coeff_re": 0.5, "coeff_im": 0.0, "paulis": "ZZ"}, ... ],
///     "metadata": { "molecule_name": "...", "bond_distance_angstrom": 0.735,
///                   "reference_ground_energy": -1.85, "initial_state": "00" } }
///
/// Throws ParseError naming the offending field (or line/column for syntax
/// errors). Terms with |coeff_im| > 1e-12 are rejected as non-Hermitian.
Problem parse_pauli_sum(std::string_view text);
Problem load_pauli_sum(const std::filesystem::path& path);

/// Inverse of parse_pauli_sum; doubles are written with round-trip precision.
std::string serialize_pauli_sum(const PauliSum& h, const ProblemMetadata& metadata = {});

/// Index of the computational basis state named by `label` (qubit 0 first).
std::uint64_t basis_index_from_label(std::string_view label);

}  // namespace piqc::io
