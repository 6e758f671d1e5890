#pragma once

#include "cnb/matrix.hpp"

namespace cnb {

/// A = P*D: permutation[j] is the 0-based row of the single nonzero in
/// column j, whose value is diagonal[j].
struct MonomialSpec {
    std::vector<std::size_t> permutation;
    std::vector<Cplx> diagonal;
};

ComplexMatrix monomial(const MonomialSpec& spec);

/// Vandermonde matrix of the nth roots of unity: entries omega^{(i-1)(j-1)}
/// with omega = exp(2*pi*i/n). Satisfies A A* = n I with unimodular entries.
ComplexMatrix fourier(unsigned n);

/// Sylvester doubling: H_1 = [1], H_{2n} = [[H, H], [H, -H]]; returns the
/// 2^m x 2^m matrix with exact +-1 entries and H H^T = 2^m I.
ComplexMatrix hadamard_sylvester(unsigned m, std::size_t size_guard = 4096);

/// First row all ones, everything else zero; attains ||A||_inf = n with unit
/// linf columns.
ComplexMatrix first_row_ones(unsigned n);

/// Hermitian PSD matrix with unit diagonal and spectrum {n/k (x k), 0 (x n-k)},
/// built from the flat spectrum by Givens rotations that equalize the
/// diagonal (at most n-1 rotations; eigenvalues are preserved exactly).
ComplexMatrix unit_diag_psd(unsigned n, unsigned k);

/// PSD square root of unit_diag_psd(n,k): unit l2 columns and
/// ||C_k(A)||_2 = (n/k)^{k/2}.
ComplexMatrix theta2_extremal(unsigned n, unsigned k);

/// First k columns have pairwise disjoint supports and the maximal subset l1
/// product, so the column-wise l1 bound is attained at beta = {1,...,k}.
ComplexMatrix disjoint_support_example(unsigned n, unsigned k);

} // namespace cnb
