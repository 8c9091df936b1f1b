#include "qpt/density_matrix.hpp"

#include <cmath>
#include <utility>

#include "qpt/errors.hpp"
#include "qpt/spectra.hpp"

namespace qpt {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DimensionSpec spec)
    : matrix_(std::move(matrix)), spec_(std::move(spec)) {
    if (matrix_.dim() != spec_.total_dim())
        throw StructuralError("matrix dimension does not match the dimension list");
}

ValidationReport validate_density(const DensityMatrix& rho, bool check_psd) {
    ValidationReport report;
    const ComplexMatrix& m = rho.matrix();

    const double herm = hermiticity_deviation(m);
    if (herm > tol::hermitian)
        report.issues.push_back({"hermiticity", herm});

    const double trace_off = std::abs(trace(m) - cplx{1.0, 0.0});
    if (trace_off > tol::unit_trace)
        report.issues.push_back({"unit_trace", trace_off});

    if (check_psd && herm <= tol::hermitian) {
        const SpectralDecomposition sd = eig_hermitian(m);
        double max_abs = 0.0;
        for (double ev : sd.eigenvalues)
            max_abs = std::max(max_abs, std::abs(ev));
        const double min_ev = sd.eigenvalues.back();
        if (min_ev < -tol::eigenvalue_zero(m.dim(), max_abs))
            report.issues.push_back({"positivity", -min_ev});
    }
    return report;
}

}  // namespace qpt
