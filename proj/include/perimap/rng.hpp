#pragma once

#include <complex>
#include <cstdint>

namespace perimap {

// Deterministic generator with a fixed cross-platform sequence (splitmix64).
// std::uniform_real_distribution is implementation-defined, so byte-stable
// output requires rolling our own mapping from raw 64-bit draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream for sample `index` of run `seed`.
    static Rng derive(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Complex draw from an annulus, avoiding tiny moduli that sit near the
    // coordinate degenerations of the catalog maps.
    std::complex<double> complex_annulus(double rmin = 0.3, double rmax = 1.5) {
        double m = uniform(rmin, rmax);
        double ph = uniform(0.0, 6.283185307179586);
        return {m * std::cos(ph), m * std::sin(ph)};
    }

    std::complex<double> complex_box(double half_width = 1.5) {
        return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
    }

  private:
    std::uint64_t state_;
};

}  // namespace perimap
