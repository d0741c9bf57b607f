#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "piqc/pulse_schedule.hpp"

namespace piqc {

struct AnsatzSpec;

/// Counter-based random stream: output i is a SplitMix64 finalization of
/// key + i * gamma, where key is derived from (master_seed, domain, stream).
/// Streams with distinct keys are independent and can be consumed in any
/// order or on any thread.
class NoiseStream {
 public:
  using result_type = std::uint64_t;

  NoiseStream(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t domain = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept;

  double normal() { return normal_(*this); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(*this); }
  int rademacher() { return ((*this)() >> 63) ? 1 : -1; }

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::normal_distribution<double> normal_;
};

/// Stream domains, so that initialization, trajectories and SPSA directions
/// never share keys.
enum class StreamDomain : std::uint64_t { init = 1, trajectory = 2, spsa = 3, test = 99 };

/// Integrated Wiener increments matching a control set's shape, flattened
/// row-major: pulse {K, n_c}; gate {L, M, n}.
struct NoiseRealization {
  std::vector<std::size_t> shape;
  std::vector<double> increments;
  std::uint64_t seed_id = 0;

  std::size_t size() const noexcept { return increments.size(); }
};

/// Pulse increments: entry (k, a) ~ N(0, D * dt_k).
NoiseRealization sample_noise(const PulseSchedule& schedule, double noise, NoiseStream& stream);
/// Gate increments: every entry ~ N(0, D) (unit-length intervals).
NoiseRealization sample_noise(const AnsatzSpec& ansatz, double noise, NoiseStream& stream);

/// Fine-grained Wiener path for pulse dynamics: `substeps` increments per
/// segment per channel, each ~ N(0, D * dt_k / substeps).
struct WienerPath {
  int substeps = 1;
  int n_channels = 0;
  std::vector<double> step_sizes;   // per segment
  std::vector<double> increments;   // [(segment * substeps + step) * n_channels + channel]

  std::size_t n_steps() const noexcept { return increments.size() / static_cast<std::size_t>(n_channels); }
};

WienerPath sample_wiener_path(const PulseSchedule& schedule, int substeps, double noise, NoiseStream& stream);

/// Sums a fine path into per-segment increments Delta W_{ak}.
NoiseRealization coarse_increments(const WienerPath& path);

}  // namespace piqc
