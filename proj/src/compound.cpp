#include "cnb/compound.hpp"

#include <string>

#include "cnb/eigen.hpp"
#include "cnb/errors.hpp"

namespace cnb {

ComplexMatrix submatrix(const ComplexMatrix& a, const SubsetLex& alpha, const SubsetLex& beta) {
    check_subset(alpha);
    check_subset(beta);
    if (alpha.n != a.rows() || beta.n != a.cols()) {
        throw DomainError("subset ambient size does not match matrix dimensions");
    }
    ComplexMatrix s(alpha.size(), beta.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j)
            s(i, j) = a(alpha.members[i] - 1, beta.members[j] - 1);
    return s;
}

CompoundMatrix compound(const ComplexMatrix& a, unsigned k, std::size_t size_guard) {
    if (!a.is_square()) throw DomainError("compound requires a square matrix");
    const unsigned n = static_cast<unsigned>(a.rows());
    if (k == 0 || k > n) {
        throw DomainError("compound order k=" + std::to_string(k) +
                          " must satisfy 1 <= k <= n=" + std::to_string(n));
    }
    const std::uint64_t dim = binomial(n, k);
    if (dim > size_guard) {
        throw ResourceError("compound dimension C(" + std::to_string(n) + "," +
                            std::to_string(k) + ") = " + std::to_string(dim) +
                            " exceeds the size guard " + std::to_string(size_guard));
    }

    const std::vector<SubsetLex> subsets = subsets_lex(n, k);
    CompoundMatrix ck{n, k, ComplexMatrix(dim, dim)};
    for (std::size_t r = 0; r < subsets.size(); ++r) {
        for (std::size_t c = 0; c < subsets.size(); ++c) {
            if (k == 1) {
                ck.matrix(r, c) = a(subsets[r].members[0] - 1, subsets[c].members[0] - 1);
            } else {
                ck.matrix(r, c) = determinant(submatrix(a, subsets[r], subsets[c]));
            }
        }
    }
    return ck;
}

double compound_l2_norm_fast(const ComplexMatrix& a, unsigned k) {
    if (!a.is_square()) throw DomainError("compound_l2_norm_fast requires a square matrix");
    const unsigned n = static_cast<unsigned>(a.rows());
    if (k == 0 || k > n) {
        throw DomainError("compound order k=" + std::to_string(k) +
                          " must satisfy 1 <= k <= n=" + std::to_string(n));
    }
    const std::vector<double> sv = singular_values(a);
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) p *= sv[i];
    return p;
}

ComplexMatrix adjugate(const ComplexMatrix& a) {
    if (!a.is_square()) throw DomainError("adjugate requires a square matrix");
    const std::size_t n = a.rows();
    if (n < 2) throw DomainError("adjugate is not defined here for 1x1 matrices");

    // adj(A) sits inside C_{n-1}(A^T) up to signs and index order: with
    // lexicographic subset indexing the (n-1)-subset missing element i has
    // rank n-i+1, so both axes reverse in addition to the alternating signs.
    const CompoundMatrix ck = compound(transpose(a), static_cast<unsigned>(n) - 1);
    ComplexMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            adj(i, j) = sign * ck.matrix(n - 1 - i, n - 1 - j);
        }
    }
    return adj;
}

} // namespace cnb
