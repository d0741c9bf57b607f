#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace piqc {

/// Per-iteration record. `noise_level` is D_j for PiQC and empty for SPSA;
/// `lambda` is R * D_j (0 for SPSA).
struct TraceRow {
  std::uint64_t iteration = 0;
  std::optional<double> noise_level;
  double lambda = 0.0;
  double energy_min = 0.0;
  double energy_mean = 0.0;
  double energy_max = 0.0;
  std::uint64_t q_eval = 0;  // cumulative

  bool operator==(const TraceRow&) const = default;
};

struct OptimizationTrace {
  std::string algorithm;
  std::vector<TraceRow> rows;
  std::vector<std::size_t> control_shape;
  std::vector<double> final_controls;
  /// PiQC: minimum trajectory energy of the final iteration (lowest index on
  /// ties). SPSA: energy at the final parameters.
  double final_energy = 0.0;
  /// Noise-free energy at the final controls.
  double deterministic_final_energy = 0.0;
  bool diverged = false;
  std::string diagnostic;

  std::uint64_t q_eval_total() const noexcept { return rows.empty() ? 0 : rows.back().q_eval; }
  bool operator==(const OptimizationTrace&) const = default;
};

}  // namespace piqc
