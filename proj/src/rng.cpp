#include "cnb/rng.hpp"

#include <cmath>
#include <numbers>

namespace cnb {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on hand-mapped uniforms keeps the stream platform-stable.
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Cplx Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Cplx(re, im) / std::sqrt(2.0);
}

Cplx Rng::random_phase() {
    const double angle = 2.0 * std::numbers::pi * uniform01();
    return Cplx(std::cos(angle), std::sin(angle));
}

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::size_t Rng::index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = index(i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

} // namespace cnb
