#include "cnb/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cnb/errors.hpp"
#include "cnb/tolerances.hpp"

namespace cnb {

namespace {

// Unitary 2x2 rotation G = [[c, s], [-conj(s), c]] with c real and
// G * (x, y)^T = (r, 0)^T.
struct Givens {
    double c = 1.0;
    Cplx s = 0.0;
};

Givens make_givens(Cplx x, Cplx y) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (ay == 0.0) return {1.0, 0.0};
    if (ax == 0.0) return {0.0, std::conj(y) / ay};
    const double r = std::hypot(ax, ay);
    return {ax / r, (x / ax) * std::conj(y) / r};
}

// Left-multiplication by G on rows (i, j).
void rotate_rows(ComplexMatrix& m, std::size_t i, std::size_t j, const Givens& g) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
        const Cplx a = m(i, col);
        const Cplx b = m(j, col);
        m(i, col) = g.c * a + g.s * b;
        m(j, col) = -std::conj(g.s) * a + g.c * b;
    }
}

// Right-multiplication by G* on columns (i, j).
void rotate_cols(ComplexMatrix& m, std::size_t i, std::size_t j, const Givens& g) {
    for (std::size_t row = 0; row < m.rows(); ++row) {
        const Cplx a = m(row, i);
        const Cplx b = m(row, j);
        m(row, i) = g.c * a + std::conj(g.s) * b;
        m(row, j) = -g.s * a + g.c * b;
    }
}

// Similarity reduction to upper Hessenberg form with Givens rotations.
void hessenberg(ComplexMatrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        for (std::size_t i = n - 1; i >= j + 2; --i) {
            if (std::abs(h(i, j)) == 0.0) continue;
            const Givens g = make_givens(h(i - 1, j), h(i, j));
            rotate_rows(h, i - 1, i, g);
            rotate_cols(h, i - 1, i, g);
            h(i, j) = 0.0;
        }
    }
}

// Eigenvalues of [[a, b], [c, d]], the larger-modulus one first.
std::pair<Cplx, Cplx> eig2x2(Cplx a, Cplx b, Cplx c, Cplx d) {
    const Cplx mean = 0.5 * (a + d);
    const Cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    Cplx l1 = mean + disc;
    Cplx l2 = mean - disc;
    if (std::abs(l2) > std::abs(l1)) std::swap(l1, l2);
    // Recover the small eigenvalue from the determinant when possible.
    if (std::abs(l1) > 0.0) l2 = (a * d - b * c) / l1;
    return {l1, l2};
}

// Wilkinson shift: the eigenvalue of the trailing 2x2 block closer to h(m,m).
Cplx wilkinson_shift(const ComplexMatrix& h, std::size_t m) {
    const auto [l1, l2] = eig2x2(h(m - 1, m - 1), h(m - 1, m), h(m, m - 1), h(m, m));
    return (std::abs(l1 - h(m, m)) <= std::abs(l2 - h(m, m))) ? l1 : l2;
}

// One implicit single-shift QR step on the unreduced block [lo, hi]. The
// chase may start below lo: when two consecutive subdiagonals are small, a
// tiny interior entry blocks the shift from reaching the bottom of the
// block, so the sweep restarts where ignoring that entry is a negligible
// perturbation.
void qr_step(ComplexMatrix& h, std::size_t lo, std::size_t hi, Cplx shift) {
    std::size_t start = lo;
    for (std::size_t m = hi - 1; m > lo; --m) {
        const double lhs = std::abs(h(m, m - 1)) * std::abs(h(m + 1, m));
        const double rhs = std::abs(h(m, m) - shift) *
                           (std::abs(h(m - 1, m - 1)) + std::abs(h(m, m)) +
                            std::abs(h(m + 1, m + 1)));
        if (lhs <= kTol.qr_subdiag * rhs) {
            start = m;
            break;
        }
    }
    Cplx x = h(start, start) - shift;
    Cplx y = h(start + 1, start);
    for (std::size_t i = start; i < hi; ++i) {
        const Givens g = make_givens(x, y);
        rotate_rows(h, i, i + 1, g);
        rotate_cols(h, i, i + 1, g);
        if (i + 1 < hi) {
            x = h(i + 1, i);
            y = h(i + 2, i);
        }
    }
}

bool modulus_order(const Cplx& a, const Cplx& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

} // namespace

double Spectrum::product_of_largest(std::size_t k) const {
    double p = 1.0;
    for (std::size_t i = 0; i < k && i < values.size(); ++i) p *= std::abs(values[i]);
    return p;
}

double Spectrum::product_of_smallest_after(std::size_t k) const {
    double p = 1.0;
    for (std::size_t i = k; i < values.size(); ++i) p *= std::abs(values[i]);
    return p;
}

Cplx determinant(const ComplexMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    ComplexMatrix lu = m;
    Cplx det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(lu(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
            det = -det;
        }
        det *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Cplx f = lu(r, col) / lu(col, col);
            if (f == Cplx{0.0, 0.0}) continue;
            for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
        }
    }
    return det;
}

Spectrum eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) throw DomainError("eigenvalues require a square matrix");
    const std::size_t n = m.rows();
    if (n > kTol.eigen_guard) {
        throw ResourceError("matrix dimension " + std::to_string(n) +
                            " exceeds the eigensolver guard " + std::to_string(kTol.eigen_guard));
    }

    Spectrum spec;
    spec.values.reserve(n);
    if (n == 1) {
        spec.values.push_back(m(0, 0));
        return spec;
    }

    ComplexMatrix h = m;
    hessenberg(h);

    const long max_iters = kTol.qr_iters_per_n * static_cast<long>(n);
    long iters = 0;
    long since_deflation = 0;
    // hi walks down as eigenvalues deflate off the bottom of the active block.
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    while (hi >= 0) {
        if (hi == 0) {
            spec.values.push_back(h(0, 0));
            break;
        }
        // Zero out negligible subdiagonals in the active range.
        for (std::ptrdiff_t i = hi; i >= 1; --i) {
            const double sub = std::abs(h(i, i - 1));
            if (sub == 0.0) continue;
            const double scale = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
            if (sub < kTol.qr_subdiag * scale || sub < 1e-300) h(i, i - 1) = 0.0;
        }
        if (h(hi, hi - 1) == Cplx{0.0, 0.0}) {
            spec.values.push_back(h(hi, hi));
            --hi;
            since_deflation = 0;
            continue;
        }
        if (hi == 1 || h(hi - 1, hi - 2) == Cplx{0.0, 0.0}) {
            const auto [l1, l2] =
                eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            spec.values.push_back(l1);
            spec.values.push_back(l2);
            hi -= 2;
            since_deflation = 0;
            continue;
        }
        std::ptrdiff_t lo = hi;
        while (lo > 0 && h(lo, lo - 1) != Cplx{0.0, 0.0}) --lo;

        // Periodic ad-hoc shift; pure Wilkinson shifts stall on cyclic
        // permutation-like blocks whose natural shift is exactly zero.
        Cplx shift;
        if (since_deflation > 0 && since_deflation % 10 == 0) {
            shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            shift = wilkinson_shift(h, hi);
        }
        qr_step(h, static_cast<std::size_t>(lo), static_cast<std::size_t>(hi), shift);
        ++iters;
        ++since_deflation;
        if (iters > max_iters) {
            throw NumericalError("QR iteration did not converge after " +
                                     std::to_string(iters) + " steps",
                                 iters);
        }
    }

    std::sort(spec.values.begin(), spec.values.end(), modulus_order);
    return spec;
}

double spectral_radius(const ComplexMatrix& m) {
    return eigenvalues(m).modulus(0);
}

HermitianEigen hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) throw DomainError("hermitian_eigenvalues require a square matrix");
    const std::size_t n = m.rows();

    // Work on the exactly Hermitian part; callers check deviation first.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        a(i, i) = Cplx(a(i, i).real(), 0.0);
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(frobenius_norm(a), 1e-300);
    int sweep = 0;
    for (; sweep < kTol.jacobi_max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
        if (std::sqrt(off) <= kTol.jacobi_off * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Cplx beta = a(p, q);
                const double ab = std::abs(beta);
                if (ab <= 1e-18 * (std::abs(a(p, p)) + std::abs(a(q, q))) || ab < 1e-300) {
                    continue;
                }
                // Phase factor makes the pivot real, then a real rotation
                // annihilates it: t solves t^2 + 2*theta*t - 1 = 0.
                const Cplx phase = beta / ab; // e^{i phi}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * ab);
                const double sgn = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Cplx sp = s * std::conj(phase); // s * e^{-i phi}

                // A <- J* A J with J = [[c, s],[-s e^{-i phi}, c e^{-i phi}]].
                for (std::size_t r = 0; r < n; ++r) {
                    const Cplx arp = a(r, p);
                    const Cplx arq = a(r, q);
                    a(r, p) = c * arp - sp * arq;
                    a(r, q) = s * arp + c * std::conj(phase) * arq;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const Cplx apc = a(p, col);
                    const Cplx aqc = a(q, col);
                    a(p, col) = c * apc - s * phase * aqc;
                    a(q, col) = s * apc + c * phase * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Cplx(a(p, p).real(), 0.0);
                a(q, q) = Cplx(a(q, q).real(), 0.0);

                for (std::size_t r = 0; r < n; ++r) {
                    const Cplx vrp = v(r, p);
                    const Cplx vrq = v(r, q);
                    v(r, p) = c * vrp - sp * vrq;
                    v(r, q) = s * vrp + c * std::conj(phase) * vrq;
                }
            }
        }
    }
    if (sweep >= kTol.jacobi_max_sweeps) {
        throw NumericalError("Jacobi iteration did not converge after " +
                                 std::to_string(sweep) + " sweeps",
                             sweep);
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    HermitianEigen result;
    result.values.resize(n);
    result.vectors = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        result.values[i] = a(order[i], order[i]).real();
        for (std::size_t r = 0; r < n; ++r) result.vectors(r, i) = v(r, order[i]);
    }
    return result;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const ComplexMatrix gram = adjoint(m) * m;
    HermitianEigen eig = hermitian_eigenvalues(gram);
    std::vector<double> sv(eig.values.size());
    for (std::size_t i = 0; i < sv.size(); ++i) sv[i] = std::sqrt(std::max(0.0, eig.values[i]));
    return sv;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& b) {
    if (!b.is_square()) throw DomainError("psd_sqrt requires a square matrix");
    const std::size_t n = b.rows();

    const double scale = std::max(1.0, max_abs(b));
    double herm_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            herm_dev = std::max(herm_dev, std::abs(b(i, j) - std::conj(b(j, i))));
    if (herm_dev > kTol.hermitian_check * scale) {
        throw DomainError("psd_sqrt input is not Hermitian (deviation " +
                          std::to_string(herm_dev) + ")");
    }

    HermitianEigen eig = hermitian_eigenvalues(b);
    const double lam_scale = std::max(1.0, std::abs(eig.values.front()));
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = eig.values[i];
        if (lam < -kTol.psd_clamp * lam_scale) {
            throw DomainError("psd_sqrt input is indefinite (eigenvalue " +
                              std::to_string(lam) + ")");
        }
        roots[i] = std::sqrt(std::max(0.0, lam));
    }

    // A = V sqrt(Lambda) V*, re-hermitized against rounding.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Cplx acc = 0.0;
            for (std::size_t l = 0; l < n; ++l)
                acc += eig.vectors(i, l) * roots[l] * std::conj(eig.vectors(j, l));
            a(i, j) = acc;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Cplx sym = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = sym;
            a(j, i) = std::conj(sym);
        }
    }
    return a;
}

} // namespace cnb
