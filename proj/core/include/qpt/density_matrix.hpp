#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpt/complex_matrix.hpp"
#include "qpt/indexing.hpp"

namespace qpt {

namespace tol {

/* Hermiticity and unit-trace slack for unit-scale inputs. */
inline constexpr double hermitian = 1e-10;
inline constexpr double unit_trace = 1e-10;

/* Below this magnitude an eigenvalue of a d-dimensional operator counts as
 * zero; also the PSD slack.  Scales with the spectral radius. */
inline double eigenvalue_zero(std::size_t dim, double max_abs_eigenvalue) {
    return static_cast<double>(dim) * 1e-12 * max_abs_eigenvalue;
}

}  // namespace tol

/* A state paired with its subsystem layout.  Construction only checks the
 * shape (matrix dimension = product of subsystem dimensions); Hermiticity,
 * unit trace and positivity are checked on demand by validate_density,
 * because partial transposes and audit outputs intentionally violate
 * positivity. */
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix matrix, DimensionSpec spec);

    const ComplexMatrix& matrix() const { return matrix_; }
    const DimensionSpec& spec() const { return spec_; }

private:
    ComplexMatrix matrix_;
    DimensionSpec spec_;
};

struct ValidationIssue {
    std::string invariant;  // "hermiticity", "unit_trace" or "positivity"
    double magnitude;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/* Positivity is only examined when check_psd is set and the matrix is
 * Hermitian within tolerance (the spectrum is meaningless otherwise). */
ValidationReport validate_density(const DensityMatrix& rho, bool check_psd = true);

}  // namespace qpt
