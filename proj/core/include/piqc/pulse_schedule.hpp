#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace piqc {

/// Piecewise-constant controls u_{ak}: K segments between ascending bounds
/// t_0 = 0 < t_1 < ... < t_K = T, and n_c channels. Values are stored
/// segment-major, value(k, a) = values()[k * n_channels + a].
class PulseSchedule {
 public:
  PulseSchedule(std::vector<double> segment_bounds, int n_channels);

  static PulseSchedule uniform(double duration, int n_segments, int n_channels);

  int n_segments() const noexcept { return static_cast<int>(bounds_.size()) - 1; }
  int n_channels() const noexcept { return n_channels_; }
  double duration() const noexcept { return bounds_.back(); }
  double segment_start(int k) const { return bounds_[static_cast<std::size_t>(k)]; }
  double segment_length(int k) const {
    return bounds_[static_cast<std::size_t>(k) + 1] - bounds_[static_cast<std::size_t>(k)];
  }
  std::span<const double> bounds() const noexcept { return bounds_; }

  double value(int k, int a) const { return values_[index(k, a)]; }
  double& value(int k, int a) { return values_[index(k, a)]; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  bool operator==(const PulseSchedule&) const = default;

 private:
  std::size_t index(int k, int a) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_channels_) + static_cast<std::size_t>(a);
  }

  std::vector<double> bounds_;
  int n_channels_;
  std::vector<double> values_;
};

}  // namespace piqc
