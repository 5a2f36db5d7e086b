// Deterministic pseudo-random generation for property suites.
//
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are derived from the raw mt19937_64 stream directly. A given seed produces
// the same sequence on every platform.

#pragma once

#include <cstdint>
#include <random>

#include "rforge/rational.hpp"

namespace rforge {

class Prng {
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound > 0. Rejection-free modulo is fine here:
    // bounds are tiny compared to 2^64, bias is irrelevant for test data.
    std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

    // Uniform integer in [lo, hi].
    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Small nonzero rational with |num| <= mag, 1 <= den <= den_mag.
    Rational next_nonzero_rational(long long mag = 9, long long den_mag = 4) {
        for (;;) {
            Rational r(next_int(-mag, mag), next_int(1, den_mag));
            if (r != 0) return r;
        }
    }

    Rational next_rational(long long mag = 9, long long den_mag = 4) {
        return Rational(next_int(-mag, mag), next_int(1, den_mag));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rforge
