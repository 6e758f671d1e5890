#include <doctest.h>

#include "cnb/eigen.hpp"
#include "cnb/errors.hpp"
#include "cnb/extremal.hpp"
#include "cnb/norms.hpp"
#include "cnb/verify.hpp"
#include "helpers.hpp"

using namespace cnb;
using cnb::test::check_close;
using cnb::test::gaussian_matrix;
using cnb::test::random_psd;

TEST_CASE("determinant basics") {
    CHECK(determinant(ComplexMatrix::identity(4)) == Cplx{1.0, 0.0});
    ComplexMatrix m(2, 2, {{1, 0}, {1, 0}, {1, 0}, {-1, 0}});
    CHECK(determinant(m) == Cplx{-2.0, 0.0});
    CHECK_THROWS_AS(determinant(ComplexMatrix(2, 3)), DomainError);
}

TEST_CASE("determinant agrees with the Laplace oracle") {
    Rng rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = gaussian_matrix(5, rng);
        SubsetLex full{5, {1, 2, 3, 4, 5}};
        const Cplx lu = determinant(a);
        const Cplx laplace = oracle_minor(a, full, full);
        check_close(lu, laplace, 1e-10);
    }
}

TEST_CASE("eigenvalues of simple matrices") {
    const std::vector<Cplx> d = {{3, 0}, {2, 0}, {1, 0}};
    const Spectrum s = eigenvalues(ComplexMatrix::diagonal(d));
    REQUIRE(s.size() == 3);
    CHECK(s.values[0] == Cplx{3, 0});
    CHECK(s.values[1] == Cplx{2, 0});
    CHECK(s.values[2] == Cplx{1, 0});

    // [[1,1],[1,-1]] has characteristic polynomial x^2 - 2.
    ComplexMatrix m(2, 2, {{1, 0}, {1, 0}, {1, 0}, {-1, 0}});
    const Spectrum s2 = eigenvalues(m);
    check_close(s2.values[0], Cplx{std::sqrt(2.0), 0}, 1e-12);
    check_close(s2.values[1], Cplx{-std::sqrt(2.0), 0}, 1e-12);

    // All eigenvalue moduli of a matrix with AA* = nI equal sqrt(n).
    const Spectrum s3 = eigenvalues(fourier(2));
    check_close(s3.modulus(0), std::sqrt(2.0), 1e-12);
    check_close(s3.modulus(1), std::sqrt(2.0), 1e-12);
}

TEST_CASE("eigenvalue sum and product match trace and determinant") {
    Rng rng(22);
    for (unsigned n = 2; n <= 8; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const ComplexMatrix a = gaussian_matrix(n, rng);
            const Spectrum s = eigenvalues(a);
            Cplx sum = 0.0;
            Cplx prod = 1.0;
            for (const Cplx& l : s.values) {
                sum += l;
                prod *= l;
            }
            check_close(sum, trace(a), 1e-8);
            check_close(prod, determinant(a), 1e-7);
        }
    }
}

TEST_CASE("eigensolver handles permutation-like matrices") {
    // A pure cycle has eigenvalues on a circle; unshifted QR cycles on it.
    for (unsigned n : {3u, 5u, 8u}) {
        ComplexMatrix p(n, n);
        for (unsigned j = 0; j < n; ++j) p((j + 1) % n, j) = 1.0;
        const Spectrum s = eigenvalues(p);
        for (unsigned i = 0; i < n; ++i) check_close(s.modulus(i), 1.0, 1e-10);
        Cplx prod = 1.0;
        for (const Cplx& l : s.values) prod *= l;
        check_close(prod, determinant(p), 1e-9);
    }
}

TEST_CASE("spectral radius never exceeds an operator norm") {
    Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const unsigned n = 2 + static_cast<unsigned>(rng.index(5));
        const ComplexMatrix a = gaussian_matrix(n, rng);
        const double rho = spectral_radius(a);
        for (NormKind p : kAllNorms) CHECK(rho <= op_norm(a, p) + 1e-8);
    }
}

TEST_CASE("eigensolver size guard") {
    CHECK_THROWS_AS(eigenvalues(ComplexMatrix(501, 501)), ResourceError);
}

TEST_CASE("singular values") {
    CHECK(singular_values(ComplexMatrix::identity(3)) == std::vector<double>{1.0, 1.0, 1.0});

    ComplexMatrix m(2, 2, {{1, 0}, {1, 0}, {1, 0}, {-1, 0}});
    const auto sv = singular_values(m);
    check_close(sv[0], std::sqrt(2.0), 1e-12);
    check_close(sv[1], std::sqrt(2.0), 1e-12);

    // Permutation times diag(3,2): singular values are just (3,2).
    ComplexMatrix pd(2, 2, {{0, 0}, {2, 0}, {3, 0}, {0, 0}});
    const auto sv2 = singular_values(pd);
    check_close(sv2[0], 3.0, 1e-12);
    check_close(sv2[1], 2.0, 1e-12);
}

TEST_CASE("product of singular values equals |det|") {
    Rng rng(24);
    for (unsigned n = 2; n <= 8; ++n) {
        const ComplexMatrix a = gaussian_matrix(n, rng);
        double p = 1.0;
        for (double s : singular_values(a)) p *= s;
        check_close(p, std::abs(determinant(a)), 1e-8);
    }
}

TEST_CASE("hermitian eigensolver reconstructs its input") {
    Rng rng(25);
    for (unsigned n : {2u, 4u, 7u}) {
        const ComplexMatrix b = random_psd(n, rng);
        const HermitianEigen eig = hermitian_eigenvalues(b);
        ComplexMatrix recon(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                Cplx acc = 0.0;
                for (unsigned l = 0; l < n; ++l)
                    acc += eig.vectors(i, l) * eig.values[l] * std::conj(eig.vectors(j, l));
                recon(i, j) = acc;
            }
        cnb::test::check_matrix_close(recon, b, 1e-12);
        for (unsigned i = 0; i + 1 < n; ++i) CHECK(eig.values[i] >= eig.values[i + 1]);
        cnb::test::check_matrix_close(adjoint(eig.vectors) * eig.vectors,
                                      ComplexMatrix::identity(n), 1e-13);
    }
}

TEST_CASE("psd_sqrt") {
    ComplexMatrix ones(2, 2, {{1, 0}, {1, 0}, {1, 0}, {1, 0}});
    const ComplexMatrix r = psd_sqrt(ones);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) check_close(r(i, j), Cplx{inv_sqrt2, 0}, 1e-12);
    cnb::test::check_matrix_close(r * r, ones, 1e-12);

    cnb::test::check_matrix_close(psd_sqrt(ComplexMatrix::identity(3)),
                                  ComplexMatrix::identity(3), 1e-13);

    const std::vector<Cplx> d = {{4, 0}, {9, 0}};
    const ComplexMatrix dm = ComplexMatrix::diagonal(d);
    const ComplexMatrix rd = psd_sqrt(dm);
    check_close(rd(0, 0), Cplx{2, 0}, 1e-13);
    check_close(rd(1, 1), Cplx{3, 0}, 1e-13);

    Rng rng(26);
    for (int rep = 0; rep < 10; ++rep) {
        const unsigned n = 2 + static_cast<unsigned>(rng.index(5));
        const ComplexMatrix b = random_psd(n, rng);
        const ComplexMatrix a = psd_sqrt(b);
        CHECK(rel_frobenius_diff(a * a, b) <= 1e-8);
    }
}

TEST_CASE("psd_sqrt rejects bad inputs") {
    ComplexMatrix notherm(2, 2, {{1, 0}, {2, 0}, {0, 0}, {1, 0}});
    CHECK_THROWS_AS(psd_sqrt(notherm), DomainError);
    const std::vector<Cplx> d = {{1, 0}, {-1, 0}};
    CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal(d)), DomainError);
}
