#pragma once

#include <cstdint>
#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

namespace wgreedy {

/// Seeded generator with platform-independent derived distributions
/// (the std:: distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Uniform integer in [0, n); n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }
    bool coin(double p = 0.5) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Stream seed for (seed, salt, i); a splitmix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1) + 0xbf58476d1ce4e5b9ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Coefficients in [-scale, scale] with exact ties, zeros and unit values mixed in.
inline double draw_coefficient(Rng& rng, double scale) {
    switch (rng.below(6)) {
        case 0: return scale;
        case 1: return -scale;
        case 2: return 0.5 * scale;
        case 3: return 0.0;
        default: return rng.uniform(-scale, scale);
    }
}

/// First `size` elements of a seeded partial shuffle.
template <class T>
std::vector<T> random_subset(Rng& rng, std::vector<T> from, std::size_t size) {
    for (std::size_t i = 0; i < from.size() && i < size; ++i) {
        const std::size_t j = i + rng.below(from.size() - i);
        std::swap(from[i], from[j]);
    }
    from.erase(from.begin() + static_cast<std::ptrdiff_t>(std::min(size, from.size())), from.end());
    return from;
}

}  // namespace wgreedy
