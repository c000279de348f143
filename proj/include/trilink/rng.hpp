#pragma once

#include <cstddef>
#include <cstdint>

namespace trilink {

/// 64-bit linear congruential generator (Knuth's MMIX constants).
///
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///
/// An index in [0, n) is ((state >> 32) * n) >> 32 computed after one step.
/// Walks seeded with the same value are reproducible on any platform.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(((next() >> 32) * static_cast<std::uint64_t>(n)) >> 32);
  }

 private:
  std::uint64_t state_;
};

}  // namespace trilink
