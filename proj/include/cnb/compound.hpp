#pragma once

#include "cnb/matrix.hpp"
#include "cnb/subsets.hpp"
#include "cnb/tolerances.hpp"

namespace cnb {

/// The kth compound of an n x n matrix: the C(n,k) x C(n,k) matrix of k x k
/// minors det A(alpha|beta), rows and columns indexed by the lexicographic
/// rank of alpha and beta.
struct CompoundMatrix {
    std::size_t base_n = 0;
    unsigned k = 0;
    ComplexMatrix matrix;
};

/// Rows alpha, columns beta of A, kept in their natural order.
ComplexMatrix submatrix(const ComplexMatrix& a, const SubsetLex& alpha, const SubsetLex& beta);

/// Entry (rank(alpha), rank(beta)) = det A(alpha|beta); each minor is an
/// independent LU evaluation. Throws ResourceError when C(n,k) exceeds the
/// guard.
CompoundMatrix compound(const ComplexMatrix& a, unsigned k,
                        std::size_t size_guard = kTol.compound_guard);

/// ||C_k(A)||_2 without forming the compound: the product of the k largest
/// singular values of A.
double compound_l2_norm_fast(const ComplexMatrix& a, unsigned k);

/// Classical adjugate through the (n-1)st compound; satisfies
/// adj(A) * A = det(A) * I. Rejects n = 1.
ComplexMatrix adjugate(const ComplexMatrix& a);

} // namespace cnb
