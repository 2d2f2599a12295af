#pragma once

#include <cstdint>

namespace dhyp {

// SplitMix64 (Steele, Lea, Flood 2014), the fixed generator for all seeded
// sampling. Pinned so that identical (config, seed) reproduce bit-exactly.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, m); rejects draws from the incomplete block at the top of
  // the 64-bit range so the result is exactly uniform. m > 0.
  std::uint64_t below(std::uint64_t m) {
    for (;;) {
      std::uint64_t z = next();
      std::uint64_t r = z % m;
      if (z - r <= 0 - m) return r;
    }
  }

private:
  std::uint64_t state_;
};

}  // namespace dhyp
