#include "cnb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "cnb/errors.hpp"
#include "cnb/norms.hpp"
#include "cnb/tolerances.hpp"

namespace cnb {

namespace {

std::vector<double> side_norms(const ComplexMatrix& a, NormKind nu, Side side) {
    const std::size_t count = side == Side::Rows ? a.rows() : a.cols();
    std::vector<double> norms(count);
    for (std::size_t i = 0; i < count; ++i) {
        norms[i] = side == Side::Rows ? vec_norm(a.row_span(i), nu)
                                      : vec_norm(a.column(i), nu);
    }
    return norms;
}

double top_k_product(std::vector<double> norms, unsigned k) {
    std::sort(norms.begin(), norms.end(), std::greater<>());
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) p *= norms[i];
    return p;
}

void check_k(const ComplexMatrix& a, unsigned k, const char* who) {
    if (!a.is_square()) throw DomainError(std::string(who) + " requires a square matrix");
    if (k == 0 || k > a.rows()) {
        throw DomainError(std::string(who) + ": k=" + std::to_string(k) +
                          " must satisfy 1 <= k <= n=" + std::to_string(a.rows()));
    }
}

double eig_coefficient(unsigned n, unsigned k, NormKind norm) {
    switch (norm) {
        case NormKind::L1: return 1.0;
        case NormKind::L2: return std::pow(static_cast<double>(n) / k, k / 2.0);
        case NormKind::LInf:
            return std::pow(static_cast<double>(n) / k, k / 2.0) *
                   std::pow(static_cast<double>(n), k / 2.0);
    }
    return 1.0;
}

ThetaValue eig_theta(unsigned n, unsigned k, NormKind norm) {
    // The coefficient of each eigenvalue bound is a theta cell: (l1,l1) for
    // the l1 bound, (l2,l2) for l2, and (l2,linf) for linf.
    switch (norm) {
        case NormKind::L1: return theta(NormKind::L1, NormKind::L1, n, k);
        case NormKind::L2: return theta(NormKind::L2, NormKind::L2, n, k);
        case NormKind::LInf: return theta(NormKind::L2, NormKind::LInf, n, k);
    }
    return {ThetaKind::Exact, 1.0};
}

} // namespace

const char* to_string(Side s) {
    switch (s) {
        case Side::Columns: return "columns";
        case Side::Rows: return "rows";
        case Side::MinOfBoth: return "min_of_both";
    }
    return "?";
}

double BoundReport::ratio() const {
    if (bound > 0.0) return quantity / bound;
    return quantity == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

double max_subset_norm_product(const ComplexMatrix& a, unsigned k, NormKind nu, Side side) {
    check_k(a, k, "max_subset_norm_product");
    if (side == Side::MinOfBoth) {
        return std::min(max_subset_norm_product(a, k, nu, Side::Columns),
                        max_subset_norm_product(a, k, nu, Side::Rows));
    }
    return top_k_product(side_norms(a, nu, side), k);
}

BoundReport compound_norm_bound(const ComplexMatrix& a, unsigned k, NormKind mu, NormKind nu) {
    check_k(a, k, "compound_norm_bound");
    return compound_norm_bound(compound(a, k), a, mu, nu);
}

BoundReport compound_norm_bound(const CompoundMatrix& ck, const ComplexMatrix& a,
                                NormKind mu, NormKind nu) {
    if (ck.base_n != a.rows() || !a.is_square()) {
        throw DomainError("compound_norm_bound: compound does not match the matrix");
    }
    const unsigned n = static_cast<unsigned>(a.rows());
    BoundReport rep;
    rep.theta = theta(mu, nu, n, ck.k);
    rep.side = Side::Columns;
    rep.column_product = max_subset_norm_product(a, ck.k, nu, Side::Columns);
    rep.quantity = op_norm(ck.matrix, mu);
    rep.bound = rep.theta.value * rep.column_product;
    rep.tight = rep.quantity >= rep.bound * (1.0 - kTol.tight_rel);
    return rep;
}

ColumnL1Bound column_compound_l1_bound(const ComplexMatrix& a, const SubsetLex& beta) {
    check_subset(beta);
    if (!a.is_square() || beta.n != a.cols()) {
        throw DomainError("column_compound_l1_bound: subset does not index the columns");
    }
    const unsigned n = static_cast<unsigned>(a.rows());
    const unsigned k = static_cast<unsigned>(beta.size());
    const std::uint64_t dim = binomial(n, k);
    if (dim > kTol.compound_guard) {
        throw ResourceError("compound dimension C(" + std::to_string(n) + "," +
                            std::to_string(k) + ") = " + std::to_string(dim) +
                            " exceeds the size guard " + std::to_string(kTol.compound_guard));
    }

    ColumnL1Bound result;
    for (const SubsetLex& alpha : subsets_lex(n, k)) {
        result.lhs += std::abs(determinant(submatrix(a, alpha, beta)));
    }
    result.rhs = max_subset_norm_product(a, k, NormKind::L1, Side::Columns);
    result.equality = std::abs(result.lhs - result.rhs) <= 1e-10 * std::max(1.0, result.rhs);

    // Condition (ii): pairwise disjoint supports and the beta product attains
    // the maximum. Supports use the exact zero pattern.
    bool disjoint = true;
    std::set<std::size_t> seen;
    for (unsigned j : beta.members) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (a(i, j - 1) == Cplx{0.0, 0.0}) continue;
            if (!seen.insert(i).second) {
                disjoint = false;
                break;
            }
        }
        if (!disjoint) break;
    }
    double beta_product = 1.0;
    for (unsigned j : beta.members) beta_product *= vec_norm(a.column(j - 1), NormKind::L1);
    const bool attains = beta_product >= result.rhs * (1.0 - 1e-12);
    result.disjoint_supports = disjoint && attains;
    return result;
}

BoundReport eig_product_upper(const ComplexMatrix& a, unsigned k, NormKind norm) {
    check_k(a, k, "eig_product_upper");
    return eig_product_upper(eigenvalues(a), a, k, norm);
}

BoundReport eig_product_upper(const Spectrum& spec, const ComplexMatrix& a,
                              unsigned k, NormKind norm) {
    check_k(a, k, "eig_product_upper");
    const unsigned n = static_cast<unsigned>(a.rows());
    BoundReport rep;
    rep.quantity = spec.product_of_largest(k);
    rep.theta = eig_theta(n, k, norm);
    rep.side = Side::MinOfBoth;
    rep.column_product = max_subset_norm_product(a, k, norm, Side::Columns);
    rep.row_product = max_subset_norm_product(a, k, norm, Side::Rows);
    rep.bound = eig_coefficient(n, k, norm) * std::min(rep.column_product, *rep.row_product);
    rep.tight = rep.quantity >= rep.bound * (1.0 - kTol.tight_rel);
    return rep;
}

bool is_numerically_nonsingular(const ComplexMatrix& a) {
    if (!a.is_square()) throw DomainError("nonsingularity test requires a square matrix");
    double hadamard = 1.0;
    for (std::size_t j = 0; j < a.cols(); ++j) hadamard *= vec_norm(a.column(j), NormKind::L2);
    const double scale = std::max(1.0, hadamard);
    return std::abs(determinant(a)) > 1e-12 * scale;
}

double eig_product_lower(const ComplexMatrix& a, unsigned k, NormKind norm) {
    check_k(a, k, "eig_product_lower");
    if (k >= a.rows()) {
        throw DomainError("eig_product_lower requires k < n");
    }
    if (!is_numerically_nonsingular(a)) {
        throw DomainError("eig_product_lower requires a nonsingular matrix");
    }
    const BoundReport upper = eig_product_upper(a, k, norm);
    return std::abs(determinant(a)) / upper.bound;
}

} // namespace cnb
