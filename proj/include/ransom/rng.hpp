#pragma once

#include <cstdint>
#include <limits>

namespace ransom {

/// Counter-based random stream.
///
/// Each draw is a pure function of (seed, stream id, counter), so a stream can
/// be split into independent sub-streams without sharing state. Parallel tasks
/// derive their own sub-stream with `substream(i)`; results then depend only on
/// the seed and the task index, never on scheduling.
class RngStream {
public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next_u64(); }
  result_type next_u64() noexcept;

  /// Uniform draw on the open interval (0, 1) with 53 bits of resolution.
  double uniform_open() noexcept;

  /// Bernoulli(prob); prob outside [0,1] is clamped.
  bool bernoulli(double prob) noexcept;

  /// Independent child stream; deterministic in (seed, stream, index).
  [[nodiscard]] RngStream substream(std::uint64_t index) const noexcept;

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_; }
  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ransom
