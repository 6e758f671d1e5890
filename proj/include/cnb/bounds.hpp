#pragma once

#include <optional>

#include "cnb/compound.hpp"
#include "cnb/eigen.hpp"
#include "cnb/theta.hpp"

namespace cnb {

enum class Side { Columns, Rows, MinOfBoth };

const char* to_string(Side s);

/// One bound evaluation: the bounded quantity, the bound value, and enough
/// context to judge tightness.
struct BoundReport {
    double quantity = 0;       // e.g. mu(C_k(A)) or |prod of k largest eigenvalues|
    double bound = 0;
    ThetaValue theta{ThetaKind::Exact, 1.0};
    Side side = Side::Columns;
    bool tight = false;        // quantity >= bound * (1 - 1e-8)
    double column_product = 0; // max subset nu-product over columns
    std::optional<double> row_product; // set when rows participate

    double ratio() const; // quantity / bound; 1 when both are zero
};

/// max over size-k subsets alpha of prod_{i in alpha} nu(col_i(A)) (or rows,
/// taken as transposed vectors). Since norms are nonnegative this is the
/// product of the k largest values, multiplied in descending order.
double max_subset_norm_product(const ComplexMatrix& a, unsigned k, NormKind nu, Side side);

/// mu(C_k(A)) <= theta_k(mu,nu) * max subset column nu-product.
BoundReport compound_norm_bound(const ComplexMatrix& a, unsigned k, NormKind mu, NormKind nu);
/// Same, reusing an already computed compound of a.
BoundReport compound_norm_bound(const CompoundMatrix& ck, const ComplexMatrix& a,
                                NormKind mu, NormKind nu);

/// The column-wise l1 inequality together with its equality certificate.
struct ColumnL1Bound {
    double lhs = 0;  // ||col_beta(C_k(A))||_1
    double rhs = 0;  // max subset l1 product
    bool equality = false;          // within 1e-10 relative
    bool disjoint_supports = false; // beta columns pairwise disjoint AND beta attains the max
};

ColumnL1Bound column_compound_l1_bound(const ComplexMatrix& a, const SubsetLex& beta);

/// |prod of k largest eigenvalue moduli| <= coeff(norm) * min(columns, rows)
/// with coeff = 1 (l1), (n/k)^{k/2} (l2), (n/k)^{k/2} * n^{k/2} (linf).
BoundReport eig_product_upper(const ComplexMatrix& a, unsigned k, NormKind norm);
/// Same, reusing an already computed spectrum of a.
BoundReport eig_product_upper(const Spectrum& spec, const ComplexMatrix& a,
                              unsigned k, NormKind norm);

/// |det A| / eig_product_upper(A,k,norm).bound — a lower bound on the
/// product of the n-k smallest eigenvalue moduli. Requires nonsingular A.
double eig_product_lower(const ComplexMatrix& a, unsigned k, NormKind norm);

/// Nonsingularity test used by eig_product_lower: |det A| must exceed
/// 1e-12 times the Hadamard column bound (clamped to at least 1).
bool is_numerically_nonsingular(const ComplexMatrix& a);

} // namespace cnb
