#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qpt/complex_matrix.hpp"
#include "qpt/density_matrix.hpp"

namespace qpt {

struct PptVerdict {
    double min_eigenvalue;
    bool npt_entangled;  // min eigenvalue of the partial transpose below -tau_zero
};

/* Spectrum of a partial transpose split at the zero tolerance tau_zero =
 * d * 1e-12 * max|eigenvalue|.  positives descend; negatives descend too,
 * i.e. run from the least to the most negative. */
struct EigClassification {
    std::vector<double> positives;
    std::vector<double> negatives;
    std::size_t zero_count = 0;

    std::size_t d_plus() const { return positives.size(); }
    std::size_t d_minus() const { return negatives.size(); }
};

struct HseCutPoint {
    /* One-based index of the last positive eigenvalue kept (with reduced
     * weight xi).  d_plus + 1 when the positives already sum to at most
     * one and no cut is needed. */
    std::size_t d_plus_prime;
    double xi;
};

struct SimplexProjection {
    double distance;
    std::vector<double> projected;  // same order as the input vector
};

struct HseReport {
    double e_hs = 0.0;
    /* Same quantity evaluated through the negative/tail form; must agree
     * with e_hs within 1e-9 or hse throws. */
    double e_hs_tail_form = 0.0;
    std::size_t d_plus_prime = 0;
    double xi = 0.0;
    EigClassification classification;
    std::optional<DensityMatrix> css;   // closest separable state, on request
    std::optional<double> css_min_eigenvalue;  // PSD audit of css; not guaranteed >= 0
    double oracle_lower_bound = 0.0;    // exact simplex projection distance
    /* Set when negatives exist although the positives sum to at most one;
     * only numerically degraded inputs reach that state. */
    bool trace_anomaly = false;
};

PptVerdict ppt_verdict(const DensityMatrix& rho, const TransposeMask& mask);

/* Negativity, the absolute sum of the negative eigenvalues of the partial
 * transpose; equals (trace norm - 1)/2 for a unit-trace input. */
double negativity(const ComplexMatrix& pt);
double negativity(const DensityMatrix& rho, const TransposeMask& mask);

/* log2(2 E_n + 1). */
double log_negativity(const ComplexMatrix& pt);
double log_negativity(const DensityMatrix& rho, const TransposeMask& mask);

/* eigs must be sorted descending. */
EigClassification classify_spectrum(const std::vector<double>& eigs, double tau_zero);

/* positives must be descending and strictly positive. */
HseCutPoint hse_cut_point(const std::vector<double>& positives);

/* Euclidean projection of a spectrum onto the probability simplex, by the
 * sort-and-threshold construction.  Serves as an independent lower-bound
 * oracle for the Hilbert-Schmidt entanglement. */
SimplexProjection simplex_projection_distance(const std::vector<double>& eigs);

/* Hilbert-Schmidt entanglement of the state behind the partial transpose
 * pt.  The first overload only reports scalars; the second can also build
 * the closest separable state, which requires the subsystem layout so the
 * transposition can be undone.  The layout must name the bipartition the
 * measure refers to (exactly two subsystems). */
HseReport hse(const ComplexMatrix& pt);
HseReport hse(const ComplexMatrix& pt, const DimensionSpec& spec, const TransposeMask& mask,
              bool want_css);
HseReport hse(const DensityMatrix& rho, const TransposeMask& mask, bool want_css);

}  // namespace qpt
