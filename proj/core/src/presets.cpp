#include "piqc/presets.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace piqc {

namespace {

constexpr std::array<MoleculePreset, 4> kPresets{{
    {"H2", 100, 64, 5e-16, 0.001, 0.00005},
    {"LiH", 400, 64, 5e-16, 0.01, 0.0005},
    {"BeH2", 800, 32, 5e-13, 0.001, 0.00005},
    {"H4", 800, 32, 5e-13, 0.001, 0.00005},
}};

}  // namespace

std::span<const MoleculePreset> molecule_presets() noexcept { return kPresets; }

std::optional<MoleculePreset> find_preset(std::string_view molecule) {
  const auto same = [&](std::string_view name) {
    return name.size() == molecule.size() &&
           std::equal(name.begin(), name.end(), molecule.begin(), [](char a, char b) {
             return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
           });
  };
  for (const auto& p : kPresets)
    if (same(p.molecule)) return p;
  return std::nullopt;
}

}  // namespace piqc
