#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace piqc {

/// Per-molecule hyperparameters: PiQC noise schedule (n_s, n_D,
/// D_final with D_init fixed) and fixed SPSA (a, c).
struct MoleculePreset {
  std::string_view molecule;
  int n_s;
  int n_d;
  double d_final;
  double spsa_learning_rate;
  double spsa_perturbation;
};

inline constexpr double kPresetDInit = 2.5e-5;
inline constexpr int kPresetNTraj = 10;
inline constexpr double kChemicalAccuracy = 1.6e-3;  // Hartree

std::span<const MoleculePreset> molecule_presets() noexcept;
/// Case-insensitive lookup ("H2", "LiH", "BeH2", "H4").
std::optional<MoleculePreset> find_preset(std::string_view molecule);

}  // namespace piqc
