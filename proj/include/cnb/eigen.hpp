#pragma once

#include <vector>

#include "cnb/matrix.hpp"

namespace cnb {

/// Eigenvalues sorted by non-increasing modulus; ties broken by real part
/// descending, then imaginary part descending, so output order is
/// deterministic.
struct Spectrum {
    std::vector<Cplx> values;

    std::size_t size() const { return values.size(); }
    double modulus(std::size_t i) const { return std::abs(values[i]); }

    /// |lambda_1 * ... * lambda_k|.
    double product_of_largest(std::size_t k) const;
    /// |lambda_{k+1} * ... * lambda_n|.
    double product_of_smallest_after(std::size_t k) const;
};

/// Determinant via LU with partial (modulus) pivoting.
Cplx determinant(const ComplexMatrix& m);

/// All eigenvalues with multiplicity, by Hessenberg reduction followed by
/// Wilkinson-shifted QR iteration with deflation.
Spectrum eigenvalues(const ComplexMatrix& m);

double spectral_radius(const ComplexMatrix& m);

struct HermitianEigen {
    std::vector<double> values; // non-increasing
    ComplexMatrix vectors;      // unitary; column i pairs with values[i]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
HermitianEigen hermitian_eigenvalues(const ComplexMatrix& m);

/// Square roots of the eigenvalues of M*M, non-increasing.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Hermitian PSD square root: returns A with A*A = B. Eigenvalues of B in
/// [-psd_clamp*scale, 0) are clamped to zero; anything lower is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& b);

} // namespace cnb
