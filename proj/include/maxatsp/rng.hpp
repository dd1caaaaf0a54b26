#pragma once

#include <cstdint>

namespace maxatsp {

// Small deterministic generator (splitmix64 core). We roll our own instead of
// using std::mt19937 so that generated instances are bit-identical across
// standard library versions; test suites bake in seeds.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound] via rejection; bound inclusive.
    uint64_t below(uint64_t bound_inclusive) {
        uint64_t span = bound_inclusive + 1;
        if (span == 0) return next();  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        for (;;) {
            uint64_t v = next();
            if (v < limit) return v % span;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo)));
    }

  private:
    uint64_t state_;
};

}  // namespace maxatsp
