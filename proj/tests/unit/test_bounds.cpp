#include <doctest.h>

#include "cnb/bounds.hpp"
#include "cnb/errors.hpp"
#include "cnb/extremal.hpp"
#include "cnb/norms.hpp"
#include "cnb/verify.hpp"
#include "helpers.hpp"

using namespace cnb;
using cnb::test::check_close;
using cnb::test::gaussian_matrix;

TEST_CASE("max_subset_norm_product") {
    const std::vector<Cplx> d = {{3, 0}, {2, 0}, {1, 0}};
    const ComplexMatrix diag = ComplexMatrix::diagonal(d);
    CHECK(max_subset_norm_product(diag, 2, NormKind::L1, Side::Columns) == 6.0);
    CHECK(max_subset_norm_product(diag, 2, NormKind::L1, Side::Rows) == 6.0);

    const ComplexMatrix id = ComplexMatrix::identity(4);
    for (unsigned k = 1; k <= 4; ++k)
        for (NormKind nu : kAllNorms)
            for (Side side : {Side::Columns, Side::Rows})
                CHECK(max_subset_norm_product(id, k, nu, side) == 1.0);

    ComplexMatrix ones(2, 2, {{1, 0}, {1, 0}, {1, 0}, {1, 0}});
    check_close(max_subset_norm_product(ones, 2, NormKind::L2, Side::Columns), 2.0, 1e-15);
}

TEST_CASE("fast subset product equals exhaustive enumeration bit for bit") {
    Rng rng(51);
    for (int rep = 0; rep < 15; ++rep) {
        const unsigned n = 2 + static_cast<unsigned>(rng.index(5));
        const ComplexMatrix a = gaussian_matrix(n, rng);
        for (unsigned k = 1; k <= n; ++k)
            for (NormKind nu : kAllNorms)
                for (Side side : {Side::Columns, Side::Rows})
                    CHECK(max_subset_norm_product(a, k, nu, side) ==
                          oracle_subset_max(a, k, nu, side));
    }
    // Tied norms: a matrix whose columns repeat.
    ComplexMatrix tied(3, 3, {{2, 0}, {2, 0}, {1, 0},
                              {2, 0}, {2, 0}, {1, 0},
                              {2, 0}, {2, 0}, {1, 0}});
    for (unsigned k = 1; k <= 3; ++k)
        for (NormKind nu : kAllNorms)
            CHECK(max_subset_norm_product(tied, k, nu, Side::Columns) ==
                  oracle_subset_max(tied, k, nu, Side::Columns));
}

TEST_CASE("compound_norm_bound is tight for monomial matrices in l1") {
    Rng rng(52);
    for (unsigned n = 2; n <= 6; ++n) {
        // Fully general monomial: per-entry magnitudes.
        MonomialSpec spec;
        spec.permutation = rng.permutation(n);
        spec.diagonal.resize(n);
        for (auto& z : spec.diagonal) z = rng.log_uniform(0.1, 10.0) * rng.random_phase();
        const ComplexMatrix a = monomial(spec);
        for (unsigned k = 1; k <= n; ++k) {
            const BoundReport rep = compound_norm_bound(a, k, NormKind::L1, NormKind::L1);
            CHECK(rep.tight);
            CHECK(std::abs(rep.ratio() - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("compound_norm_bound equality for the l2 extremal matrix") {
    const ComplexMatrix a = theta2_extremal(4, 2);
    const BoundReport rep = compound_norm_bound(a, 2, NormKind::L2, NormKind::L2);
    check_close(rep.quantity, 2.0, 1e-7);
    check_close(rep.bound, 2.0, 1e-7);
    CHECK(rep.tight);
}

TEST_CASE("compound_norm_bound equality for fourier(4) at k = n-1 in linf") {
    // theta_{n-1}(linf,linf) = n^{n/2} = 16 for n = 4, attained with unit
    // linf columns, so quantity and bound agree at 16.
    const BoundReport rep = compound_norm_bound(fourier(4), 3, NormKind::LInf, NormKind::LInf);
    check_close(rep.quantity, 16.0, 1e-9);
    check_close(rep.bound, 16.0, 1e-9);
    CHECK(rep.tight);
    CHECK(rep.theta.exact());
}

TEST_CASE("compound_norm_bound is strict in l2 for nonsingular matrices") {
    Rng rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const unsigned n = 2 + static_cast<unsigned>(rng.index(5));
        const ComplexMatrix a = gaussian_matrix(n, rng);
        if (!is_numerically_nonsingular(a)) continue;
        for (unsigned k = 1; k < n; ++k) {
            const BoundReport r = compound_norm_bound(a, k, NormKind::L2, NormKind::L2);
            CHECK(r.ratio() < 1.0 - 1e-10);
        }
    }
}

TEST_CASE("compound_norm_bound soundness across all norm pairs") {
    Rng rng(54);
    for (unsigned n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix a = gaussian_matrix(n, rng);
            for (unsigned k = 1; k <= n; ++k) {
                const CompoundMatrix ck = compound(a, k);
                for (NormKind mu : kAllNorms) {
                    for (NormKind nu : kAllNorms) {
                        const BoundReport r = compound_norm_bound(ck, a, mu, nu);
                        CHECK(r.quantity <= r.bound * (1.0 + 1e-8));
                    }
                }
            }
        }
    }
}

TEST_CASE("column_compound_l1_bound") {
    // Permutation matrix: equality with disjoint supports for any beta.
    ComplexMatrix p(3, 3);
    p(0, 1) = 1.0;
    p(1, 2) = 1.0;
    p(2, 0) = 1.0;
    for (const auto& beta : subsets_lex(3, 2)) {
        const ColumnL1Bound r = column_compound_l1_bound(p, beta);
        CHECK(r.equality);
        CHECK(r.disjoint_supports);
    }

    // Rank one: every 2x2 minor vanishes while the norm product is 9.
    ComplexMatrix ones(3, 3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) ones(i, j) = 1.0;
    const ColumnL1Bound r = column_compound_l1_bound(ones, SubsetLex{3, {1, 2}});
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 9.0);
    CHECK(!r.equality);
    CHECK(!r.disjoint_supports);

    const ColumnL1Bound rid =
        column_compound_l1_bound(ComplexMatrix::identity(3), SubsetLex{3, {1, 2}});
    CHECK(rid.lhs == 1.0);
    CHECK(rid.rhs == 1.0);
    CHECK(rid.equality);
    CHECK(rid.disjoint_supports);

    CHECK_THROWS_AS(column_compound_l1_bound(ones, SubsetLex{4, {1, 2}}), DomainError);
    CHECK_THROWS_AS(column_compound_l1_bound(ones, SubsetLex{3, {1, 4}}), DomainError);
}

TEST_CASE("column bound inequality holds on random matrices") {
    Rng rng(55);
    for (unsigned n = 2; n <= 6; ++n) {
        const ComplexMatrix a = gaussian_matrix(n, rng);
        for (unsigned k = 1; k <= n; ++k)
            for (const auto& beta : subsets_lex(n, k)) {
                const ColumnL1Bound r = column_compound_l1_bound(a, beta);
                CHECK(r.lhs <= r.rhs * (1.0 + 1e-12));
            }
    }
}

TEST_CASE("eig_product_upper examples") {
    const std::vector<Cplx> d32 = {{3, 0}, {2, 0}};
    const BoundReport r1 =
        eig_product_upper(ComplexMatrix::diagonal(d32), 1, NormKind::L1);
    CHECK(r1.quantity == 3.0);
    CHECK(r1.bound == 3.0);
    CHECK(r1.tight);
    CHECK(r1.side == Side::MinOfBoth);

    const ComplexMatrix f4 = fourier(4);
    const BoundReport rl1 = eig_product_upper(f4, 2, NormKind::L1);
    check_close(rl1.bound, 16.0, 1e-9);
    check_close(rl1.quantity, 4.0, 1e-9);
    const BoundReport rl2 = eig_product_upper(f4, 2, NormKind::L2);
    check_close(rl2.bound, 8.0, 1e-9);

    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const ComplexMatrix a = theta2_extremal(n, k);
            const BoundReport r = eig_product_upper(a, k, NormKind::L2);
            const double target = std::pow(static_cast<double>(n) / k, k / 2.0);
            check_close(r.quantity, target, 1e-7);
            check_close(r.bound, target, 1e-7);
        }
    }
}

TEST_CASE("eig_product_lower") {
    const std::vector<Cplx> d = {{3, 0}, {2, 0}, {1, 0}};
    const ComplexMatrix diag = ComplexMatrix::diagonal(d);
    const double lower = eig_product_lower(diag, 1, NormKind::L1);
    CHECK(lower == 2.0); // 6 / 3, and |l2 l3| = 2 exactly
    const Spectrum s = eigenvalues(diag);
    CHECK(lower <= s.product_of_smallest_after(1) + 1e-12);

    for (unsigned k = 1; k < 4; ++k)
        CHECK(eig_product_lower(ComplexMatrix::identity(4), k, NormKind::L1) == 1.0);

    Rng rng(56);
    const ComplexMatrix a = gaussian_matrix(5, rng);
    REQUIRE(is_numerically_nonsingular(a));
    const Spectrum sa = eigenvalues(a);
    for (NormKind norm : kAllNorms) {
        const double low = eig_product_lower(a, 2, norm);
        CHECK(low <= sa.product_of_smallest_after(2) + 1e-7);
    }

    ComplexMatrix singular(3, 3);
    singular(0, 0) = 1.0;
    CHECK_THROWS_AS(eig_product_lower(singular, 1, NormKind::L1), DomainError);
    CHECK_THROWS_AS(eig_product_lower(diag, 3, NormKind::L1), DomainError);
}

TEST_CASE("eigenvalue bounds: l-infinity bound dominates the l2 bound") {
    Rng rng(57);
    for (int rep = 0; rep < 10; ++rep) {
        const unsigned n = 2 + static_cast<unsigned>(rng.index(5));
        const ComplexMatrix a = gaussian_matrix(n, rng);
        const Spectrum s = eigenvalues(a);
        for (unsigned k = 1; k <= n; ++k) {
            const double b2 = eig_product_upper(s, a, k, NormKind::L2).bound;
            const double b3 = eig_product_upper(s, a, k, NormKind::LInf).bound;
            CHECK(b3 >= b2 * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("BoundReport ratio degenerate cases") {
    BoundReport r;
    r.quantity = 0.0;
    r.bound = 0.0;
    CHECK(r.ratio() == 1.0);
    r.quantity = 1.0;
    CHECK(std::isinf(r.ratio()));
}
