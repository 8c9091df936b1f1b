#include "qpt/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/partial_transpose.hpp"
#include "qpt/spectra.hpp"

namespace qpt {

namespace {

/* Positives summing to at most 1 + this slack means the spectrum already
 * lies on the probability simplex and the state is separable in the
 * Hilbert-Schmidt sense. */
constexpr double kSeparableSlack = 1e-9;

/* Tie-break for the cumulative-sum comparison in the cut search, so float
 * noise cannot flip the branch on an exact tie. */
constexpr double kCutTie = 1e-12;

/* The two evaluations of the squared measure must agree this well. */
constexpr double kCrossCheckTol = 1e-9;

void require_unit_trace(const ComplexMatrix& pt) {
    const double off = std::abs(trace(pt) - cplx{1.0, 0.0});
    if (off > tol::unit_trace)
        throw ContractViolation("partial transpose trace differs from one by " +
                                std::to_string(off));
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double sum_sorted_squares(const std::vector<double>& v) {
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        sq[i] = v[i] * v[i];
    std::sort(sq.begin(), sq.end());
    return std::accumulate(sq.begin(), sq.end(), 0.0);
}

}  // namespace

PptVerdict ppt_verdict(const DensityMatrix& rho, const TransposeMask& mask) {
    const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.spec(), mask);
    const SpectralDecomposition sd = eig_hermitian(pt);
    const double min_ev = sd.eigenvalues.back();
    const double tau = tol::eigenvalue_zero(pt.dim(), max_abs(sd.eigenvalues));
    return {min_ev, min_ev < -tau};
}

double negativity(const ComplexMatrix& pt) {
    require_unit_trace(pt);
    const SpectralDecomposition sd = eig_hermitian(pt);
    const double tau = tol::eigenvalue_zero(pt.dim(), max_abs(sd.eigenvalues));
    const EigClassification cls = classify_spectrum(sd.eigenvalues, tau);
    double sum = 0.0;
    for (double n : cls.negatives)
        sum += -n;
    return sum;
}

double negativity(const DensityMatrix& rho, const TransposeMask& mask) {
    return negativity(partial_transpose(rho.matrix(), rho.spec(), mask));
}

double log_negativity(const ComplexMatrix& pt) {
    return std::log2(2.0 * negativity(pt) + 1.0);
}

double log_negativity(const DensityMatrix& rho, const TransposeMask& mask) {
    return log_negativity(partial_transpose(rho.matrix(), rho.spec(), mask));
}

EigClassification classify_spectrum(const std::vector<double>& eigs, double tau_zero) {
    for (std::size_t j = 1; j < eigs.size(); ++j)
        if (eigs[j] > eigs[j - 1])
            throw std::invalid_argument("spectrum must be sorted descending");
    EigClassification cls;
    for (double ev : eigs) {
        if (ev > tau_zero)
            cls.positives.push_back(ev);
        else if (ev < -tau_zero)
            cls.negatives.push_back(ev);
        else
            ++cls.zero_count;
    }
    return cls;
}

HseCutPoint hse_cut_point(const std::vector<double>& positives) {
    double total = 0.0;
    for (std::size_t j = 0; j < positives.size(); ++j) {
        if (positives[j] <= 0.0)
            throw ContractViolation("cut search requires strictly positive weights");
        if (j > 0 && positives[j] > positives[j - 1])
            throw ContractViolation("cut search requires a descending list");
        total += positives[j];
    }
    if (total <= 1.0 + kSeparableSlack)
        return {positives.size() + 1, 0.0};

    double cumulative = 0.0;
    for (std::size_t j = 0; j < positives.size(); ++j) {
        const double previous = cumulative;
        cumulative += positives[j];
        if (cumulative > 1.0 + kCutTie)
            return {j + 1, 1.0 - previous};
    }
    /* Unreachable: the total already exceeded 1 + slack. */
    throw NumericalError("cut search failed to locate the crossing");
}

SimplexProjection simplex_projection_distance(const std::vector<double>& eigs) {
    const std::size_t d = eigs.size();
    std::vector<double> sorted(eigs);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    double cumulative = 0.0;
    double threshold = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        cumulative += sorted[k];
        const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (sorted[k] - candidate > 0.0)
            threshold = candidate;
    }

    SimplexProjection out;
    out.projected.resize(d);
    std::vector<double> gaps(d);
    for (std::size_t i = 0; i < d; ++i) {
        out.projected[i] = std::max(0.0, eigs[i] - threshold);
        const double g = eigs[i] - out.projected[i];
        gaps[i] = g * g;
    }
    std::sort(gaps.begin(), gaps.end());
    out.distance = std::sqrt(std::accumulate(gaps.begin(), gaps.end(), 0.0));
    return out;
}

namespace {

HseReport hse_impl(const ComplexMatrix& pt, const DimensionSpec* spec, const TransposeMask* mask,
                   bool want_css) {
    require_unit_trace(pt);
    const SpectralDecomposition sd = eig_hermitian(pt);
    const std::size_t d = pt.dim();
    const double tau = tol::eigenvalue_zero(d, max_abs(sd.eigenvalues));

    HseReport report;
    report.classification = classify_spectrum(sd.eigenvalues, tau);
    const std::vector<double>& pos = report.classification.positives;
    const std::vector<double>& neg = report.classification.negatives;
    const double sum_pos = std::accumulate(pos.begin(), pos.end(), 0.0);

    const bool on_simplex = sum_pos <= 1.0 + kSeparableSlack;
    if (on_simplex && neg.empty()) {
        report.d_plus_prime = pos.size() + 1;
        report.xi = 0.0;
        report.e_hs = 0.0;
        report.e_hs_tail_form = 0.0;
        report.oracle_lower_bound = 0.0;
        if (want_css && spec != nullptr) {
            /* Already separable: the closest state is the state itself,
             * recovered by undoing the transposition. */
            ComplexMatrix rho = partial_transpose(pt, *spec, *mask);
            const SpectralDecomposition audit = eig_hermitian(rho);
            report.css_min_eigenvalue = audit.eigenvalues.back();
            report.css = DensityMatrix(std::move(rho), *spec);
        }
        return report;
    }

    if (pos.empty())
        throw ContractViolation("unit-trace spectrum without positive eigenvalues");

    if (on_simplex) {
        /* Negatives exist although the positives fit under one; only a
         * degraded trace gets here.  Cut at the last positive and absorb
         * the deficit into xi. */
        report.trace_anomaly = true;
        report.d_plus_prime = pos.size();
        double before = 0.0;
        for (std::size_t j = 0; j + 1 < pos.size(); ++j)
            before += pos[j];
        report.xi = 1.0 - before;
    } else {
        const HseCutPoint cut = hse_cut_point(pos);
        report.d_plus_prime = cut.d_plus_prime;
        report.xi = cut.xi;
    }

    const std::size_t cut_idx = report.d_plus_prime;  // one-based
    std::vector<double> tail(pos.begin() + static_cast<std::ptrdiff_t>(cut_idx), pos.end());
    const double tail_sq = sum_sorted_squares(tail);
    const double neg_sq = sum_sorted_squares(neg);
    const double sum_neg = std::accumulate(neg.begin(), neg.end(), 0.0);
    const double sum_tail = std::accumulate(tail.begin(), tail.end(), 0.0);

    const double head = pos[cut_idx - 1] - report.xi;
    report.e_hs = std::sqrt(head * head + tail_sq + neg_sq);
    const double alt = -sum_neg - sum_tail;
    report.e_hs_tail_form = std::sqrt(alt * alt + tail_sq + neg_sq);
    if (std::abs(report.e_hs - report.e_hs_tail_form) > kCrossCheckTol)
        throw NumericalError("the two evaluations of the Hilbert-Schmidt measure disagree: " +
                             std::to_string(report.e_hs) + " vs " +
                             std::to_string(report.e_hs_tail_form));

    report.oracle_lower_bound = simplex_projection_distance(sd.eigenvalues).distance;
    if (report.e_hs < report.oracle_lower_bound - kCrossCheckTol)
        throw NumericalError("measure fell below the simplex projection lower bound");

    if (want_css && spec != nullptr) {
        /* Closest separable state: keep the first d_plus_prime - 1 positive
         * eigenprojectors at full weight, give the next one weight xi, then
         * undo the transposition. */
        ComplexMatrix xi_op(d);
        auto add_projector = [&](std::size_t j, double weight) {
            for (std::size_t r = 0; r < d; ++r) {
                const cplx vr = sd.eigenvectors(r, j);
                xi_op(r, r) += weight * std::norm(vr);
                for (std::size_t c = r + 1; c < d; ++c) {
                    const cplx z = weight * vr * std::conj(sd.eigenvectors(c, j));
                    xi_op(r, c) += z;
                    xi_op(c, r) += std::conj(z);
                }
            }
        };
        for (std::size_t j = 0; j + 1 < cut_idx; ++j)
            add_projector(j, pos[j]);
        if (report.xi != 0.0)
            add_projector(cut_idx - 1, report.xi);
        for (std::size_t r = 0; r < d; ++r)
            xi_op(r, r) = cplx{xi_op(r, r).real(), 0.0};

        ComplexMatrix css = partial_transpose(xi_op, *spec, *mask);
        const SpectralDecomposition audit = eig_hermitian(css);
        report.css_min_eigenvalue = audit.eigenvalues.back();
        report.css = DensityMatrix(std::move(css), *spec);
    }
    return report;
}

}  // namespace

HseReport hse(const ComplexMatrix& pt) {
    return hse_impl(pt, nullptr, nullptr, false);
}

HseReport hse(const ComplexMatrix& pt, const DimensionSpec& spec, const TransposeMask& mask,
              bool want_css) {
    if (spec.subsystem_count() != 2)
        throw StructuralError("the measure is defined for a bipartition; regroup the subsystems "
                              "into two factors");
    if (mask.size() != 2)
        throw StructuralError("mask length does not match the dimension list");
    if (spec.total_dim() != pt.dim())
        throw StructuralError("matrix dimension does not match the dimension list");
    return hse_impl(pt, &spec, &mask, want_css);
}

HseReport hse(const DensityMatrix& rho, const TransposeMask& mask, bool want_css) {
    const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.spec(), mask);
    return hse(pt, rho.spec(), mask, want_css);
}

}  // namespace qpt
