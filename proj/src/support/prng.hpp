#pragma once

#include <cstdint>

namespace morse {

// splitmix64: deterministic across platforms, unlike the distributions in
// <random>. All seeded sampling in the project goes through this so fixed
// seeds give byte-identical runs.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    long long range(long long lo, long long hi) { // inclusive bounds
        return lo + (long long)below((uint64_t)(hi - lo + 1));
    }

private:
    uint64_t state_;
};

} // namespace morse
