#pragma once

#include <cstdint>
#include <random>

namespace graphseg {

// Deterministic random source. mt19937_64 is fully specified by the standard,
// and the mapping to doubles/indices below avoids std::uniform_*_distribution,
// whose output is implementation-defined. Same seed, same stream, everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double real(double a, double b) { return a + (b - a) * real01(); }

    // uniform in {0, ..., n-1}; n must be positive and small relative to 2^64
    int index(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace graphseg
