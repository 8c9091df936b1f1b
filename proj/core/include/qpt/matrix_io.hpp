#pragma once

#include <iosfwd>
#include <string>

#include "qpt/complex_matrix.hpp"

namespace qpt {

/* Text format, one matrix per file:
 *
 *   dim <d>
 *   <re im>  <re im>  ...   (d pairs per row, d rows, row-major)
 *
 * Lines starting with '#' are comments.  Values are written with 17
 * significant digits so write followed by read reproduces every entry
 * bit for bit. */

ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const ComplexMatrix& a);
void write_matrix_file(const std::string& path, const ComplexMatrix& a);

}  // namespace qpt
