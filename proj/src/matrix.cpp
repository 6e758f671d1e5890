#include "cnb/matrix.hpp"

#include <cmath>
#include <string>

#include "cnb/errors.hpp"

namespace cnb {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw DomainError("matrix dimensions must be positive, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("matrix shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Cplx{0.0, 0.0}) {
    check_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    check_dims(rows, cols);
    if (a_.size() != rows * cols) {
        throw DomainError("entry count " + std::to_string(a_.size()) + " does not match " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const Cplx& z : a_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

std::span<const Cplx> ComplexMatrix::row_span(std::size_t i) const {
    return std::span<const Cplx>(a_.data() + i * cols_, cols_);
}

std::vector<Cplx> ComplexMatrix::row(std::size_t i) const {
    auto s = row_span(i);
    return std::vector<Cplx>(s.begin(), s.end());
}

std::vector<Cplx> ComplexMatrix::column(std::size_t j) const {
    std::vector<Cplx> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a, b);
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a, b);
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DomainError("matrix product shape mismatch: " + std::to_string(a.cols()) +
                          " columns vs " + std::to_string(b.rows()) + " rows");
    }
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Cplx ail = a(i, l);
            if (ail == Cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += ail * b(l, j);
        }
    }
    return r;
}

ComplexMatrix operator*(Cplx scalar, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = scalar * a(i, j);
    return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = std::conj(a(i, j));
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

Cplx trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw DomainError("trace requires a square matrix");
    Cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Cplx& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Cplx& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double rel_frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a, b);
    return frobenius_norm(a - b) /
           std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
}

} // namespace cnb
