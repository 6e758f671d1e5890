#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cnb/matrix.hpp"

namespace cnb {

/// Deterministic random source: std::mt19937_64 for raw 64-bit words, with
/// all distributions mapped by hand (53-bit uniforms, Box-Muller gaussians)
/// so the sample stream is identical on every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; generates pairs, caches the spare.
    double gaussian();

    /// Standard complex normal CN(0,1): E|z|^2 = 1.
    Cplx complex_gaussian();

    /// exp(i*phi) with phi uniform in [0, 2*pi).
    Cplx random_phase();

    /// exp(Uniform(log lo, log hi)).
    double log_uniform(double lo, double hi);

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n);

    /// Fisher-Yates permutation of {0,...,n-1}.
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

} // namespace cnb
