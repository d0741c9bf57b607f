#include "piqc/noise.hpp"

#include <cmath>

#include "piqc/dynamics.hpp"
#include "piqc/errors.hpp"

namespace piqc {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_noise(double noise) {
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw InputError("noise strength D must be finite and >= 0");
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t domain)
    : key_(finalize(finalize(finalize(master_seed + kGamma) ^ (domain * kGamma)) + stream * kGamma)) {}

NoiseStream::result_type NoiseStream::operator()() noexcept { return finalize(key_ + (++counter_) * kGamma); }

NoiseRealization sample_noise(const PulseSchedule& schedule, double noise, NoiseStream& stream) {
  check_noise(noise);
  NoiseRealization out;
  out.shape = {static_cast<std::size_t>(schedule.n_segments()), static_cast<std::size_t>(schedule.n_channels())};
  out.seed_id = stream.key();
  out.increments.reserve(schedule.values().size());
  for (int k = 0; k < schedule.n_segments(); ++k) {
    const double sd = std::sqrt(noise * schedule.segment_length(k));
    for (int a = 0; a < schedule.n_channels(); ++a) out.increments.push_back(sd * stream.normal());
  }
  return out;
}

NoiseRealization sample_noise(const AnsatzSpec& ansatz, double noise, NoiseStream& stream) {
  check_noise(noise);
  NoiseRealization out;
  out.shape = {static_cast<std::size_t>(ansatz.n_layers), static_cast<std::size_t>(ansatz.rotations_per_layer()),
               static_cast<std::size_t>(ansatz.n_qubits)};
  out.seed_id = stream.key();
  const double sd = std::sqrt(noise);
  out.increments.resize(ansatz.n_params());
  for (auto& x : out.increments) x = sd * stream.normal();
  return out;
}

WienerPath sample_wiener_path(const PulseSchedule& schedule, int substeps, double noise, NoiseStream& stream) {
  check_noise(noise);
  if (substeps < 1) throw InputError("Wiener path needs at least one substep per segment");
  WienerPath path;
  path.substeps = substeps;
  path.n_channels = schedule.n_channels();
  path.increments.reserve(static_cast<std::size_t>(schedule.n_segments()) * static_cast<std::size_t>(substeps) *
                          static_cast<std::size_t>(schedule.n_channels()));
  for (int k = 0; k < schedule.n_segments(); ++k) {
    const double dt = schedule.segment_length(k) / substeps;
    path.step_sizes.push_back(dt);
    const double sd = std::sqrt(noise * dt);
    for (int s = 0; s < substeps; ++s)
      for (int a = 0; a < schedule.n_channels(); ++a) path.increments.push_back(sd * stream.normal());
  }
  return path;
}

NoiseRealization coarse_increments(const WienerPath& path) {
  const std::size_t n_seg = path.step_sizes.size();
  const auto n_c = static_cast<std::size_t>(path.n_channels);
  const auto sub = static_cast<std::size_t>(path.substeps);
  NoiseRealization out;
  out.shape = {n_seg, n_c};
  out.increments.assign(n_seg * n_c, 0.0);
  for (std::size_t k = 0; k < n_seg; ++k)
    for (std::size_t s = 0; s < sub; ++s)
      for (std::size_t a = 0; a < n_c; ++a) out.increments[k * n_c + a] += path.increments[(k * sub + s) * n_c + a];
  return out;
}

}  // namespace piqc
