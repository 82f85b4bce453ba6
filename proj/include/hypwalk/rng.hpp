#pragma once

#include <cstdint>

namespace hypwalk {

/// Counter-based generator: every variate is a pure function of
/// (seed, trial, step), so trials can run on any worker in any order and
/// still reproduce bit-identically.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    static uint64_t mix(uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform(uint64_t trial, uint64_t step) const {
        const uint64_t h = mix(seed_ ^ mix(trial ^ mix(step)));
        return static_cast<double>(h >> 11) * 0x1.0p-53;
    }

  private:
    uint64_t seed_;
};

} // namespace hypwalk
