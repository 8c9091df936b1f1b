#pragma once

#include <cstddef>

#include "qpt/complex_matrix.hpp"
#include "qpt/indexing.hpp"

namespace qpt {

/* Partial transposition is a pure entry permutation: the output at row r,
 * column c (as multi-indices) is the input entry with the r and c
 * components of every transposed subsystem exchanged.  Entries are moved,
 * never conjugated, so the spectrum of whatever comes out is exactly the
 * multiset of eigenvalues of the permuted operator. */

ComplexMatrix transpose(const ComplexMatrix& a);

/* Bipartite system d_a x d_b, transpose over the first factor. */
ComplexMatrix partial_transpose_a(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b);

/* Bipartite system d_a x d_b, transpose over the second factor. */
ComplexMatrix partial_transpose_b(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b);

/* Tripartite system d_a x d_b x d_c, transpose over the middle factor. */
ComplexMatrix partial_transpose_3(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b,
                                  std::size_t d_c);

/* Any number of subsystems, any subset of them transposed, in one
 * permutation pass.  Transposing two subsystems equals composing the two
 * single-subsystem transpositions. */
ComplexMatrix partial_transpose(const ComplexMatrix& a, const DimensionSpec& spec,
                                const TransposeMask& mask);

}  // namespace qpt
