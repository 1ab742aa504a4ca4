#pragma once

#include <cstdint>

namespace ecx {

/// 64-bit linear congruential stream used for every seeded point set:
///   x <- x * 6364136223846793005 + 1442695040888963407 (mod 2^64),
///   u  = (x >> 11) * 2^-53 in [0, 1).
/// The state is advanced before each draw; the initial state is the seed.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

}  // namespace ecx
