// Counter-based pseudo-random generation with splittable substreams.
//
// The generator is splitmix64: output i of a stream with seed s is
// mix64(s + (i+1)*GOLDEN). Because each output depends only on (seed, i),
// substreams derived with derive_seed are reproducible regardless of how
// work is ordered or parallelized. Bit-compatibility is promised within
// this implementation only, not across languages.

#pragma once

#include <cmath>
#include <cstdint>

namespace hvc {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Seed for substream `index` of the stream seeded by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed + kGoldenGamma * (index + 1));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // uniform on [0, 1), 53 random bits
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform on [lo, hi)
  double next_in(double lo, double hi) noexcept {
    return lo + next_unit() * (hi - lo);
  }

  // standard normal, Box-Muller (two uniforms per draw, nothing cached)
  double next_normal() noexcept {
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace hvc
