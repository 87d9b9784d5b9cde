#pragma once

#include <cstdint>

namespace gduel {

// SplitMix64 (Steele, Lea & Flood's mix driven by a Weyl sequence).
// Used only to derive independent per-trial seeds; the i-th output for a
// given seed is reachable in O(1), so trials can run in any order and
// still see identical streams.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // The (index+1)-th output of a stream seeded with `seed`, without
  // stepping through the stream.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + index * kGamma).next();
  }

 private:
  std::uint64_t state_;
};

// Marsaglia/Vigna xorshift64* generator: xorshift with shifts 12/25/27
// followed by multiplication with 2685821657736338717. State must be
// nonzero.
class XorShift64Star {
 public:
  static constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1Dull;

  explicit XorShift64Star(std::uint64_t state)
      : state_(state != 0 ? state : SplitMix64::kGamma) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * kMultiplier;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gduel
