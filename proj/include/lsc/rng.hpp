#pragma once

#include <cstdint>
#include <random>

namespace lsc {

/// Deterministic uniform generator. std::mt19937_64 has a portable bit
/// sequence; the float mapping is done by hand because the standard
/// distributions are implementation-defined and reports must reproduce
/// byte-identically for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b). Requires a <= b.
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in {a, ..., b}. Requires a <= b.
    int uniform_int(int a, int b) {
        auto span = static_cast<std::uint64_t>(b - a) + 1;
        return a + static_cast<int>(eng_() % span);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace lsc
