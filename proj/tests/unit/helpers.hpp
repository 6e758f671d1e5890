#pragma once

#include <doctest.h>

#include "cnb/eigen.hpp"
#include "cnb/matrix.hpp"
#include "cnb/rng.hpp"
#include "cnb/tolerances.hpp"

namespace cnb::test {

inline ComplexMatrix gaussian_matrix(unsigned n, Rng& rng) {
    ComplexMatrix a(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
    return a;
}

inline ComplexMatrix random_psd(unsigned n, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(n, rng);
    return adjoint(g) * g;
}

/// Unitary matrix from the eigenvectors of a random Hermitian matrix.
inline ComplexMatrix random_unitary(unsigned n, Rng& rng) {
    return hermitian_eigenvalues(random_psd(n, rng)).vectors;
}

inline void check_close(double a, double b, double tol) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel_diff(a, b) <= tol);
}

inline void check_close(Cplx a, Cplx b, double tol) {
    CAPTURE(a.real());
    CAPTURE(b.real());
    CHECK(std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}));
}

inline void check_matrix_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    CHECK(rel_frobenius_diff(a, b) <= tol);
}

} // namespace cnb::test
