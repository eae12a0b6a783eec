#pragma once

#include <cstdint>
#include <random>

#include "core/complex_disc.hpp"

namespace tripick {

// splitmix64; used to derive independent substreams from (seed, index) so
// sampling is reproducible bit-for-bit and order-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic uniform stream. std::mt19937_64 output is pinned by the
// standard; doubles are derived by hand (uniform_real_distribution is not
// bit-stable across library implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed ^ splitmix64(index + 1)));
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // area-uniform on the disc of the given radius
    Complex disc(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double th = 2.0 * 3.14159265358979323846 * uniform();
        return std::polar(r, th);
    }

    Complex torus() { return std::polar(1.0, 2.0 * 3.14159265358979323846 * uniform()); }

private:
    std::mt19937_64 engine_;
};

} // namespace tripick
