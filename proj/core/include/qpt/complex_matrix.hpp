#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qpt {

using cplx = std::complex<double>;

/* Dense square complex matrix, row-major, zero-based.  This is the one
 * carrier type every operation works on; density matrices, their partial
 * transposes and eigenvector collections are all stored this way. */
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const cplx& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    std::span<const cplx> entries() const { return entries_; }
    std::span<cplx> entries() { return {entries_.data(), entries_.size()}; }

private:
    std::size_t dim_;
    std::vector<cplx> entries_;  // always dim_ * dim_ elements
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);

/* Largest |a(j,k) - conj(a(k,j))| over all entry pairs; zero for an exactly
 * Hermitian matrix. */
double hermiticity_deviation(const ComplexMatrix& a);

}  // namespace qpt
