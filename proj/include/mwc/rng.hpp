#pragma once

#include <cstdint>
#include <random>

namespace mwc {

// Deterministic RNG used by every stochastic choice in a run. mt19937_64 is
// bit-exact across platforms, and the bounded draw below is rejection-based,
// so identical seeds give identical move traces everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in {0, ..., n-1}; n == 0 returns 0.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % n;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace mwc
