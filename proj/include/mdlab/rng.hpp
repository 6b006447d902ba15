#pragma once

#include <cstdint>

namespace mdlab {

// splitmix64 (Steele/Lea/Flood). Every seeded draw in the project goes
// through this generator so that outputs are identical on every platform;
// std::mt19937 distributions are not portable across standard libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 random bits
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, n), n >= 1, rejection sampled
    uint64_t next_below(uint64_t n) {
        const uint64_t limit = n * (UINT64_MAX / n);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

  private:
    uint64_t state_;
};

}  // namespace mdlab
