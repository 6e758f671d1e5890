#include "cnb/extremal.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cnb/eigen.hpp"
#include "cnb/errors.hpp"
#include "cnb/tolerances.hpp"

namespace cnb {

namespace {

// cos/sin of 2*pi*m/n with values snapped to exact -1, 0, 1 where the angle
// is an axis multiple; keeps the n = 1, 2, 4 generators exactly integral.
double snap(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) < 4e-16 && std::abs(r) <= 1.0) return r;
    return v;
}

} // namespace

ComplexMatrix monomial(const MonomialSpec& spec) {
    const std::size_t n = spec.permutation.size();
    if (n == 0 || spec.diagonal.size() != n) {
        throw DomainError("monomial spec needs matching nonempty permutation and diagonal");
    }
    std::vector<bool> hit(n, false);
    for (std::size_t p : spec.permutation) {
        if (p >= n || hit[p]) throw DomainError("monomial permutation is not a bijection");
        hit[p] = true;
    }
    ComplexMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) a(spec.permutation[j], j) = spec.diagonal[j];
    return a;
}

ComplexMatrix fourier(unsigned n) {
    if (n == 0) throw DomainError("fourier requires n >= 1");
    ComplexMatrix a(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const unsigned m = static_cast<unsigned>(
                (static_cast<std::uint64_t>(i) * j) % n);
            const double angle = 2.0 * std::numbers::pi * m / n;
            a(i, j) = Cplx(snap(std::cos(angle)), snap(std::sin(angle)));
        }
    }
    return a;
}

ComplexMatrix hadamard_sylvester(unsigned m, std::size_t size_guard) {
    const std::size_t n = std::size_t{1} << m;
    if (m >= 63 || n > size_guard) {
        throw ResourceError("hadamard dimension 2^" + std::to_string(m) +
                            " exceeds the size guard " + std::to_string(size_guard));
    }
    ComplexMatrix h(1, 1);
    h(0, 0) = 1.0;
    for (std::size_t half = 1; half < n; half *= 2) {
        ComplexMatrix next(2 * half, 2 * half);
        for (std::size_t i = 0; i < half; ++i) {
            for (std::size_t j = 0; j < half; ++j) {
                next(i, j) = h(i, j);
                next(i, j + half) = h(i, j);
                next(i + half, j) = h(i, j);
                next(i + half, j + half) = -h(i, j);
            }
        }
        h = std::move(next);
    }
    return h;
}

ComplexMatrix first_row_ones(unsigned n) {
    if (n == 0) throw DomainError("first_row_ones requires n >= 1");
    ComplexMatrix a(n, n);
    for (unsigned j = 0; j < n; ++j) a(0, j) = 1.0;
    return a;
}

ComplexMatrix unit_diag_psd(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) {
        throw DomainError("unit_diag_psd requires 1 <= k <= n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    }
    // Start from the flat spectrum {n/k (x k), 0 (x n-k)} and equalize the
    // diagonal by Givens similarities. Each rotation pins the smallest
    // diagonal entry to exactly 1, so at most n-1 rotations are needed
    // (trace n cannot leave a single off-unit entry behind).
    ComplexMatrix b(n, n);
    for (unsigned i = 0; i < k; ++i) b(i, i) = static_cast<double>(n) / k;

    // Loose enough to absorb rounding drift of the rotations themselves; the
    // published certificate tolerance on the diagonal is 1e-10.
    const double tol = 1e-11;
    for (unsigned rot = 0; rot <= n; ++rot) {
        unsigned lo = 0, hi = 0;
        for (unsigned i = 1; i < n; ++i) {
            if (b(i, i).real() < b(lo, lo).real()) lo = i;
            if (b(i, i).real() > b(hi, hi).real()) hi = i;
        }
        if (b(hi, hi).real() - 1.0 <= tol && 1.0 - b(lo, lo).real() <= tol) {
            for (unsigned i = 0; i < n; ++i) b(i, i) = 1.0;
            return b;
        }
        if (rot == n) break; // should have converged within n-1 rotations

        const double app = b(lo, lo).real();
        const double aqq = b(hi, hi).real();
        const double apq = b(lo, hi).real();
        // Rotation angle with tan t making the (lo,lo) entry exactly 1:
        // (aqq-1) t^2 - 2 apq t + (app-1) = 0, stable small root.
        const double disc = std::sqrt(apq * apq - (app - 1.0) * (aqq - 1.0));
        const double denom = apq >= 0.0 ? apq + disc : apq - disc;
        if (denom == 0.0) {
            throw NumericalError("diagonal equalization hit a degenerate pivot pair", rot);
        }
        const double t = (app - 1.0) / denom;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (unsigned r = 0; r < n; ++r) {
            const Cplx rp = b(r, lo);
            const Cplx rq = b(r, hi);
            b(r, lo) = c * rp - s * rq;
            b(r, hi) = s * rp + c * rq;
        }
        for (unsigned col = 0; col < n; ++col) {
            const Cplx pc = b(lo, col);
            const Cplx qc = b(hi, col);
            b(lo, col) = c * pc - s * qc;
            b(hi, col) = s * pc + c * qc;
        }
        b(lo, lo) = 1.0;
        b(hi, hi) = app + aqq - 1.0;
        b(hi, lo) = b(lo, hi); // keep exactly symmetric
    }
    throw NumericalError("diagonal equalization did not settle within n rotations", n);
}

ComplexMatrix theta2_extremal(unsigned n, unsigned k) {
    return psd_sqrt(unit_diag_psd(n, k));
}

ComplexMatrix disjoint_support_example(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) {
        throw DomainError("disjoint_support_example requires 1 <= k <= n");
    }
    // Columns 1..k share out the rows round-robin; entries stay on the 0.25
    // grid so the certificate products are exact. Later columns get a single
    // small entry so they never influence the maximal subset product.
    ComplexMatrix a(n, n);
    for (unsigned r = 0; r < n; ++r) {
        const unsigned j = r % k;
        a(r, j) = 1.0 + 0.5 * static_cast<double>((r + j) % 3);
    }
    for (unsigned j = k; j < n; ++j) a(j % n, j) = 0.25;
    return a;
}

} // namespace cnb
