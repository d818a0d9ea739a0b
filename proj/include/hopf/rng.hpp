#pragma once

#include <cstdint>
#include <random>

namespace hopf {

// Seeded random source. The engine sequence is fixed by the standard and the
// bounded sampling is done by hand, so streams are reproducible across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n), n > 0
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

    // uniform in [lo, hi], inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace hopf
