#pragma once

#include <cstdint>

#include "poscert/rational.hpp"

namespace poscert {

// splitmix64: the seeded generator used for every randomized step so runs
// replay across platforms. state advances by the golden-ratio increment,
// output is the finalizer mix of the new state.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1, by rejection
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // random rational p/q with |p| <= num_bound, 1 <= q <= den_bound
    Rat rational(long num_bound, long den_bound) {
        long p = range(-num_bound, num_bound);
        long q = range(1, den_bound);
        return make_rat(p, q);
    }
};

}  // namespace poscert
