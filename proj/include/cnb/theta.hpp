#pragma once

#include "cnb/norms.hpp"

namespace cnb {

/// Whether a table cell is a proved sharp constant or only a proved upper
/// bound on theta_k(mu,nu).
enum class ThetaKind { Exact, UpperBound };

struct ThetaValue {
    ThetaKind kind;
    double value;

    bool exact() const { return kind == ThetaKind::Exact; }
};

const char* to_string(ThetaKind k);

/// theta_k(mu,nu): the best constant c such that
/// mu(C_k(A)) <= c * max_{|alpha|=k} prod_{i in alpha} nu(col_i(A)).
///
/// Exact cells: (l1,l1) = 1; (l2,l2) = (n/k)^{k/2}; (linf,linf) with k = 1
/// (value n) or k in {n-1, n} (value n^{n/2}). Every other cell is an upper
/// bound: (linf,linf) for 1 < k < n-1 is C(n,k)*(k+1)^{(k-1)/2}, and the
/// mixed cells follow by the norm-equivalence lemma.
ThetaValue theta(NormKind mu, NormKind nu, unsigned n, unsigned k);

/// h(k,n) = n^k / (k^{k/2} * (k+1)^{(k-1)/2} * C(n,k)), defined for
/// 1 <= k < n; always <= 1.
double h(unsigned k, unsigned n);

/// True iff (n/k)^{k/2} <= C(n,k)(k+1)^{(k-1)/2} and
/// (n/k)^{k/2} * n^{k/2} <= C(n,k)(k+1)^{(k-1)/2} both hold numerically.
bool theta_dominance_check(unsigned n, unsigned k);

} // namespace cnb
