// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace docdeg {

/// SplitMix64 stream. Every random decision in the library draws from one of
/// these, so a seed fully determines a degradation run.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t state() const noexcept { return state_; }

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Integer in [0, bound) by 64x64 -> 128 multiply-high. One draw per call.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return mul_high(next_u64(), bound);
  }

  /// Real in (0, 1]; top 53 bits of one draw.
  double unit_open_closed() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Box-Muller cosine branch. Always consumes exactly two draws, even when
  /// sd == 0, so draw counts never depend on parameters.
  double normal(double mean, double sd) noexcept {
    const double u1 = unit_open_closed();
    const double u2 = unit_open_closed();
    const double z =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return mean + sd * z;
  }

private:
  static constexpr std::uint64_t mul_high(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t a_lo = a & 0xFFFFFFFFu, a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xFFFFFFFFu, b_hi = b >> 32;
    const std::uint64_t lo_lo = a_lo * b_lo;
    const std::uint64_t hi_lo = a_hi * b_lo;
    const std::uint64_t lo_hi = a_lo * b_hi;
    const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFu) + lo_hi;
    return a_hi * b_hi + (hi_lo >> 32) + (cross >> 32);
  }

  std::uint64_t state_;
};

inline std::uint64_t uniform_u64(Rng& rng) noexcept { return rng.next_u64(); }
inline double normal(Rng& rng, double mean, double sd) noexcept {
  return rng.normal(mean, sd);
}

}  // namespace docdeg
