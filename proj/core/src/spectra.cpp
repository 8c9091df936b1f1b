#include "qpt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "qpt/density_matrix.hpp"
#include "qpt/errors.hpp"

namespace qpt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/* Sweep budget; cyclic Jacobi converges quadratically and normally needs
 * around ten sweeps, so hitting this means the input was not Hermitian in
 * any meaningful sense. */
constexpr std::size_t kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& m) {
    const std::size_t d = m.dim();
    std::vector<double> sq;
    sq.reserve(d * (d - 1));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if (r != c)
                sq.push_back(std::norm(m(r, c)));
    std::sort(sq.begin(), sq.end());
    double sum = 0.0;
    for (double v : sq)
        sum += v;
    return std::sqrt(sum);
}

void require_hermitian(const ComplexMatrix& a) {
    double scale = 0.0;
    for (const cplx& z : a.entries())
        scale = std::max(scale, std::abs(z));
    const double dev = hermiticity_deviation(a);
    if (dev > tol::hermitian * std::max(1.0, scale))
        throw ContractViolation("matrix is not Hermitian: deviation " + std::to_string(dev));
}

/* One Jacobi rotation zeroing m(p, q), accumulated into v.  m stays exactly
 * Hermitian with a real diagonal because both triangles are written as
 * conjugate pairs. */
void rotate(ComplexMatrix& m, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx b = m(p, q);
    const double absb = std::abs(b);
    if (absb == 0.0)
        return;
    const cplx phase = b / absb;
    const double app = m(p, p).real();
    const double aqq = m(q, q).real();
    const double theta = (app - aqq) / (2.0 * absb);
    double t = -1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    if (theta < 0.0)
        t = -t;
    if (!std::isfinite(t))
        return;  // rotation angle underflows, nothing to gain
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cplx sigma = s * phase;

    const std::size_t d = m.dim();
    m(p, p) = cplx{app * c * c + aqq * s * s - 2.0 * c * s * absb, 0.0};
    m(q, q) = cplx{app * s * s + aqq * c * c + 2.0 * c * s * absb, 0.0};
    m(p, q) = cplx{0.0, 0.0};
    m(q, p) = cplx{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) {
        if (i == p || i == q)
            continue;
        const cplx zip = m(i, p);
        const cplx ziq = m(i, q);
        m(i, p) = c * zip - std::conj(sigma) * ziq;
        m(i, q) = sigma * zip + c * ziq;
        m(p, i) = std::conj(m(i, p));
        m(q, i) = std::conj(m(i, q));
    }
    for (std::size_t i = 0; i < d; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip - std::conj(sigma) * viq;
        v(i, q) = sigma * vip + c * viq;
    }
}

std::vector<cplx> column(const ComplexMatrix& m, std::size_t c) {
    std::vector<cplx> out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        out[r] = m(r, c);
    return out;
}

}  // namespace

SpectralDecomposition eig_hermitian(const ComplexMatrix& a) {
    require_hermitian(a);
    const std::size_t d = a.dim();

    /* Work on the exactly Hermitian part defined by the upper triangle. */
    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
        m(r, r) = cplx{a(r, r).real(), 0.0};
        for (std::size_t c = r + 1; c < d; ++c) {
            m(r, c) = a(r, c);
            m(c, r) = std::conj(a(r, c));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double scale = hs_norm(a);
    if (scale > 0.0 && d > 1) {
        /* Sweep until the off-diagonal norm reaches the rounding floor or
         * stops shrinking; either way it must end up far below the
         * d * 1e-10 * ||a|| reconstruction budget. */
        const double floor_stop = static_cast<double>(d) * kEps * scale;
        const double loose_stop = static_cast<double>(d) * 1e-13 * scale;
        bool converged = false;
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
            const double off = off_diagonal_norm(m);
            if (off <= floor_stop) {
                converged = true;
                break;
            }
            if (off >= prev) {
                converged = off <= loose_stop;
                break;
            }
            prev = off;
            for (std::size_t p = 0; p + 1 < d; ++p)
                for (std::size_t q = p + 1; q < d; ++q)
                    rotate(m, v, p, q);
        }
        if (!converged && off_diagonal_norm(m) > loose_stop)
            throw NumericalError("Jacobi iteration did not converge, off-diagonal norm " +
                                 std::to_string(off_diagonal_norm(m)));
    }

    /* Descending eigenvalue order; exact ties keep the sweep order. */
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&m](std::size_t i, std::size_t j) {
        return m(i, i).real() > m(j, j).real();
    });

    SpectralDecomposition sd{std::vector<double>(d), ComplexMatrix(d)};
    std::vector<std::vector<cplx>> basis(d);
    for (std::size_t j = 0; j < d; ++j) {
        sd.eigenvalues[j] = m(order[j], order[j]).real();
        basis[j] = column(v, order[j]);
    }

    /* Deterministic basis: re-orthonormalize in the sorted order (which
     * only matters inside degenerate clusters), then fix each phase by
     * making the largest-magnitude component real and positive. */
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx overlap{0.0, 0.0};
            for (std::size_t i = 0; i < d; ++i)
                overlap += std::conj(basis[k][i]) * basis[j][i];
            for (std::size_t i = 0; i < d; ++i)
                basis[j][i] -= overlap * basis[k][i];
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            norm2 += std::norm(basis[j][i]);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < d; ++i)
            basis[j][i] *= inv;

        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double mag = std::abs(basis[j][i]);
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        const cplx anchor = basis[j][arg];
        const cplx unphase = std::conj(anchor) / std::abs(anchor);
        for (std::size_t i = 0; i < d; ++i)
            basis[j][i] *= unphase;

        for (std::size_t i = 0; i < d; ++i)
            sd.eigenvectors(i, j) = basis[j][i];
    }
    return sd;
}

double trace_norm_hermitian(const ComplexMatrix& a) {
    const SpectralDecomposition sd = eig_hermitian(a);
    std::vector<double> mags(sd.eigenvalues.size());
    for (std::size_t j = 0; j < mags.size(); ++j)
        mags[j] = std::abs(sd.eigenvalues[j]);
    std::sort(mags.begin(), mags.end());
    double sum = 0.0;
    for (double v : mags)
        sum += v;
    return sum;
}

double hs_norm(const ComplexMatrix& a) {
    std::vector<double> sq(a.entries().size());
    auto in = a.entries();
    for (std::size_t i = 0; i < sq.size(); ++i)
        sq[i] = std::norm(in[i]);
    std::sort(sq.begin(), sq.end());
    double sum = 0.0;
    for (double v : sq)
        sum += v;
    return std::sqrt(sum);
}

}  // namespace qpt
