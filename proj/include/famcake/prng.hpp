#pragma once

#include <cstdint>

namespace famcake {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen so that seeded instances
// reproduce bit-for-bit across implementations: the whole generator is these
// few lines, with no library dependence.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n); the modulo bias is irrelevant for fixture
    // generation and keeps the algorithm one line.
    uint64_t below(uint64_t n) { return next() % n; }

  private:
    uint64_t state_;
};

} // namespace famcake
