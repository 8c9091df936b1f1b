#pragma once

#include <cstddef>
#include <vector>

#include "qpt/complex_matrix.hpp"

namespace qpt {

/* eigenvalues descending; column j of eigenvectors pairs with
 * eigenvalues[j].  The basis is orthonormal and deterministic: ties keep
 * the order the solver produced them in, and each vector is rotated so its
 * largest-magnitude component is real and positive. */
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/* Cyclic Jacobi on the complex Hermitian matrix.  Throws ContractViolation
 * if a is not Hermitian within tolerance and NumericalError if the
 * off-diagonal norm has not collapsed within the sweep budget. */
SpectralDecomposition eig_hermitian(const ComplexMatrix& a);

/* Sum of |eigenvalue| over the spectrum.  Equals the trace norm because the
 * input is Hermitian. */
double trace_norm_hermitian(const ComplexMatrix& a);

/* Hilbert-Schmidt (Frobenius) norm.  The squared magnitudes are summed in
 * sorted order, so the result is invariant under any permutation of the
 * entries; partial transposition therefore preserves it bitwise. */
double hs_norm(const ComplexMatrix& a);

}  // namespace qpt
