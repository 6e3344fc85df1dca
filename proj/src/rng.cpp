#include "ransom/rng.hpp"

namespace ransom {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed + kGolden) ^ mix64(stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : seed_(seed), stream_(stream), key_(stream_key(seed, stream)) {}

std::uint64_t RngStream::next_u64() noexcept {
  const std::uint64_t x = key_ + (++counter_) * kGolden;
  return mix64(x);
}

double RngStream::uniform_open() noexcept {
  // (k + 0.5) / 2^53 with k in [0, 2^53) never hits 0 or 1.
  const std::uint64_t k = next_u64() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

bool RngStream::bernoulli(double prob) noexcept {
  if (prob <= 0.0) return false;
  if (prob >= 1.0) return true;
  return uniform_open() < prob;
}

RngStream RngStream::substream(std::uint64_t index) const noexcept {
  return RngStream(seed_, mix64(key_ ^ mix64(index + kGolden)));
}

}  // namespace ransom
