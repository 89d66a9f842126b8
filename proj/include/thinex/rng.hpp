#ifndef THINEX_RNG_HPP
#define THINEX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

// Deterministic sampling primitives for the random-matrix laboratory.
//
// Every matrix draw gets its own engine seeded by a documented 64-bit mix
// of (base seed, draw index, matrix index), so serial and parallel runs of
// any thread count produce identical streams. The variate transforms
// (Marsaglia polar / Marsaglia-Tsang) are spelled out here rather than taken
// from <random>, whose distribution algorithms are unspecified.

namespace thinex {

/// splitmix64 finalizer: the standard 64-bit avalanche mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Per-matrix seed: three chained splitmix64 rounds,
/// mix64(mix64(mix64(base) ^ draw) ^ matrix).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t draw_index,
                                 std::uint64_t matrix_index) {
    return mix64(mix64(mix64(base) ^ draw_index) ^ matrix_index);
}

/// Seeded stream of uniform / normal / gamma / chi variates backed by
/// mt19937_64 (bit-exact per the standard).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0,1), 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Marsaglia polar method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double v1, v2, s;
        do {
            v1 = 2.0 * uniform() - 1.0;
            v2 = 2.0 * uniform() - 1.0;
            s = v1 * v1 + v2 * v2;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v2 * scale;
        has_spare_ = true;
        return v1 * scale;
    }

    /// Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang squeeze).
    double gamma(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

    /// chi_dof variate (dof >= 2): sqrt of a chi-squared draw.
    double chi(double dof) { return std::sqrt(2.0 * gamma(0.5 * dof)); }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace thinex

#endif // THINEX_RNG_HPP
