#include "qpt/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qpt/errors.hpp"

namespace qpt {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, cplx{0.0, 0.0}) {
    if (dim == 0)
        throw StructuralError("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j)
        m(j, j) = cplx{1.0, 0.0};
    return m;
}

static void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw StructuralError("matrix dimensions differ");
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix out(a.dim());
    auto oa = a.entries();
    auto ob = b.entries();
    auto oo = out.entries();
    for (std::size_t i = 0; i < oo.size(); ++i)
        oo[i] = oa[i] + ob[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix out(a.dim());
    auto oa = a.entries();
    auto ob = b.entries();
    auto oo = out.entries();
    for (std::size_t i = 0; i < oo.size(); ++i)
        oo[i] = oa[i] - ob[i];
    return out;
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    auto oa = a.entries();
    auto oo = out.entries();
    for (std::size_t i = 0; i < oo.size(); ++i)
        oo[i] = scale * oa[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0})
                continue;
            for (std::size_t j = 0; j < d; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

cplx trace(const ComplexMatrix& a) {
    cplx t{0.0, 0.0};
    for (std::size_t j = 0; j < a.dim(); ++j)
        t += a(j, j);
    return t;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            out(c, r) = std::conj(a(r, c));
    return out;
}

double hermiticity_deviation(const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c)
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
    return worst;
}

}  // namespace qpt
