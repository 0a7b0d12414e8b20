#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace shiftspec {

// Deterministic generator with platform-independent output. Distributions
// are built directly from the raw 64-bit stream so seeded runs reproduce
// bit-for-bit across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    std::complex<double> complex_in_disc(double radius = 1.0) {
        // rejection sampling keeps the distribution rotation invariant
        for (;;) {
            double x = uniform(-1.0, 1.0);
            double y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {radius * x, radius * y};
        }
    }

    std::complex<double> unit_complex() {
        double t = uniform(0.0, 2.0 * 3.14159265358979323846);
        return {std::cos(t), std::sin(t)};
    }

private:
    std::mt19937_64 eng_;
};

} // namespace shiftspec
