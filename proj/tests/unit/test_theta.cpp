#include <doctest.h>

#include "cnb/errors.hpp"
#include "cnb/subsets.hpp"
#include "cnb/theta.hpp"
#include "helpers.hpp"

using namespace cnb;
using cnb::test::check_close;

TEST_CASE("theta table: proved-exact cells") {
    const ThetaValue t11 = theta(NormKind::L1, NormKind::L1, 5, 3);
    CHECK(t11.exact());
    CHECK(t11.value == 1.0);

    const ThetaValue t22 = theta(NormKind::L2, NormKind::L2, 4, 2);
    CHECK(t22.exact());
    CHECK(t22.value == 2.0); // (4/2)^{2/2}

    const ThetaValue tinf_k1 = theta(NormKind::LInf, NormKind::LInf, 7, 1);
    CHECK(tinf_k1.exact());
    CHECK(tinf_k1.value == 7.0);

    const ThetaValue tinf_kn = theta(NormKind::LInf, NormKind::LInf, 4, 4);
    CHECK(tinf_kn.exact());
    CHECK(tinf_kn.value == 16.0); // 4^{4/2}

    const ThetaValue tinf_nm1 = theta(NormKind::LInf, NormKind::LInf, 3, 2);
    CHECK(tinf_nm1.exact());
    check_close(tinf_nm1.value, std::pow(3.0, 1.5), 1e-15);
}

TEST_CASE("theta table: upper-bound cells") {
    const ThetaValue a11 = theta(NormKind::LInf, NormKind::LInf, 5, 2);
    CHECK(!a11.exact());
    check_close(a11.value, 10.0 * std::sqrt(3.0), 1e-15); // C(5,2) * 3^{1/2}

    check_close(theta(NormKind::L1, NormKind::L2, 5, 3).value, std::pow(5.0, 1.5), 1e-15);
    check_close(theta(NormKind::L1, NormKind::LInf, 5, 3).value, 125.0, 1e-15);
    check_close(theta(NormKind::L2, NormKind::L1, 4, 2).value, 2.0, 1e-15);
    check_close(theta(NormKind::L2, NormKind::LInf, 4, 2).value, 2.0 * 4.0, 1e-15);
    for (NormKind nu : {NormKind::L1, NormKind::L2}) {
        const ThetaValue cell = theta(NormKind::LInf, nu, 5, 2);
        CHECK(!cell.exact());
        check_close(cell.value, 10.0 * std::sqrt(3.0), 1e-15);
        const ThetaValue cell_n = theta(NormKind::LInf, nu, 5, 5);
        check_close(cell_n.value, std::pow(5.0, 2.5), 1e-15);
    }
    for (NormKind mu : kAllNorms)
        for (NormKind nu : kAllNorms)
            CHECK(theta(mu, nu, 6, 3).value > 0.0);
}

TEST_CASE("theta at n=2, k=1: the k=1 and k=n-1 formulas agree") {
    const ThetaValue t = theta(NormKind::LInf, NormKind::LInf, 2, 1);
    CHECK(t.exact());
    CHECK(t.value == 2.0); // n and n^{n/2} coincide
}

TEST_CASE("theta domain errors") {
    CHECK_THROWS_AS(theta(NormKind::L1, NormKind::L1, 4, 0), DomainError);
    CHECK_THROWS_AS(theta(NormKind::L1, NormKind::L1, 4, 5), DomainError);
}

TEST_CASE("h function") {
    for (unsigned n = 2; n <= 64; ++n) CHECK(std::abs(h(1, n) - 1.0) <= 1e-15);

    // h(2,3) = 9 / (2 * sqrt(3) * 3)
    check_close(h(2, 3), 9.0 / (6.0 * std::sqrt(3.0)), 1e-14);

    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned k = 1; k < n; ++k) CHECK(h(k, n) <= 1.0 + 1e-12);

    CHECK_THROWS_AS(h(3, 3), DomainError);
    CHECK_THROWS_AS(h(0, 3), DomainError);
}

TEST_CASE("h recurrence: h(k,n)/h(k+1,n+1) = (n sqrt(k+2) / (sqrt(k) (n+1)))^k") {
    for (unsigned n = 2; n <= 12; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            const double lhs = h(k, n) / h(k + 1, n + 1);
            const double rhs =
                std::pow(n * std::sqrt(k + 2.0) / (std::sqrt(static_cast<double>(k)) * (n + 1)),
                         static_cast<double>(k));
            CHECK(rel_diff(lhs, rhs) <= 1e-12);
        }
    }
}

TEST_CASE("theta dominance holds everywhere at desk scale") {
    CHECK(theta_dominance_check(3, 2));
    CHECK(theta_dominance_check(10, 1));
    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned k = 1; k < n; ++k) CHECK(theta_dominance_check(n, k));
    CHECK_THROWS_AS(theta_dominance_check(3, 3), DomainError);
}
