#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace d2d {

// Deterministic RNG with hand-rolled value mappings. std::mt19937_64 produces
// an identical bit stream on every conforming implementation, but the standard
// <random> distributions do not, so uniform/normal are mapped here explicitly.
// Any change to these mappings changes every generated instance byte-for-byte.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Box-Muller, cosine branch only: exactly two uniform draws per call.
    double normal(double mean, double stddev) {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586477 * u2);
    }

  private:
    std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive independent per-(point, drop) seeds
// from one experiment base seed without correlating the streams.
inline uint64_t mix_seed(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t point, uint64_t drop) {
    return mix_seed(mix_seed(base + 0x100000001b3ULL * point) + drop);
}

}  // namespace d2d
