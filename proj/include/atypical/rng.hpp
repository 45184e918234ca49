#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>

namespace atypical {

// Deterministic counter-free PRNG (splitmix64). Streams are derived from a
// seed plus structural indices, so parallel work items draw identical values
// regardless of scheduling or thread count.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state ? state : 0x9e3779b97f4a7c15ULL) {}

    static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> indices) {
        std::uint64_t s = mix(seed ^ 0xa0761d6478bd642fULL);
        for (std::uint64_t ix : indices) s = mix(s ^ mix(ix + 0x8bb84b93962eacc9ULL));
        return Rng(s);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    double normal() {
        // Box-Muller; the pair is consumed together to keep streams aligned.
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::complex<double> complex_normal() {
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-std::log(u1));
        return {r * std::cos(6.283185307179586 * u2), r * std::sin(6.283185307179586 * u2)};
    }

    // Unit-modulus complex number.
    std::complex<double> phase() {
        double t = 6.283185307179586 * uniform();
        return {std::cos(t), std::sin(t)};
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {  // inclusive bounds
        return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
        z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
        return z ^ (z >> 33);
    }

    std::uint64_t state_;
};

}  // namespace atypical
