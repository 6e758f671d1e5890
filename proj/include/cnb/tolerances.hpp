#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace cnb {

/// Central numeric configuration; every threshold used by the library is
/// defined here rather than scattered through the code.
struct Tolerances {
    /// Shifted-QR deflation: a subdiagonal entry h(i+1,i) is negligible when
    /// |h(i+1,i)| < qr_subdiag * (|h(i,i)| + |h(i+1,i+1)|).
    double qr_subdiag = 1e-14;
    /// Total shifted-QR iteration cap is qr_iters_per_n * n.
    long qr_iters_per_n = 100;

    /// Cyclic Jacobi: sweep cap and off-diagonal threshold relative to the
    /// Frobenius norm of the input.
    int jacobi_max_sweeps = 40;
    double jacobi_off = 1e-14;

    /// psd_sqrt preconditions: Hermitian deviation, and how far below zero
    /// an eigenvalue may sit (relative to the spectral scale) and still be
    /// clamped instead of rejected.
    double hermitian_check = 1e-10;
    double psd_clamp = 1e-10;

    /// Ratio threshold for the BoundReport tight flag:
    /// tight iff quantity >= bound * (1 - tight_rel).
    double tight_rel = 1e-8;

    /// Largest matrix the dense eigensolver accepts.
    std::size_t eigen_guard = 500;
    /// Largest admissible compound dimension C(n,k).
    std::size_t compound_guard = 10000;
};

inline constexpr Tolerances kTol{};

/// |a-b| measured against max(1, |a|, |b|).
inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace cnb
