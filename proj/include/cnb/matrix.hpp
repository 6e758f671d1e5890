#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cnb {

using Cplx = std::complex<double>;

/// Dense row-major complex matrix. Both dimensions are at least 1 and fixed
/// at construction; entry vectors supplied by callers are checked for
/// finiteness. Instances are plain values and safe to share across threads
/// once built.
class ComplexMatrix {
public:
    ComplexMatrix() = default; // empty placeholder, 0x0
    ComplexMatrix(std::size_t rows, std::size_t cols); // zero-filled
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Cplx> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return a_.empty(); }

    Cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<const Cplx> entries() const { return a_; }
    std::span<const Cplx> row_span(std::size_t i) const;
    std::vector<Cplx> row(std::size_t i) const;
    std::vector<Cplx> column(std::size_t j) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Cplx scalar, const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

Cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);

/// Frobenius distance between a and b relative to max(1, ||a||_F, ||b||_F).
double rel_frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace cnb
