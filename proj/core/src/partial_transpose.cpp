#include "qpt/partial_transpose.hpp"

#include <vector>

#include "qpt/errors.hpp"

namespace qpt {

ComplexMatrix transpose(const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            out(c, r) = a(r, c);
    return out;
}

static void require_bipartite(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b) {
    if (d_a == 0 || d_b == 0)
        throw StructuralError("subsystem dimensions must be positive");
    if (a.dim() != d_a * d_b)
        throw StructuralError("matrix dimension does not equal d_a * d_b");
}

ComplexMatrix partial_transpose_a(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b) {
    require_bipartite(a, d_a, d_b);
    ComplexMatrix out(a.dim());
    for (std::size_t ja = 0; ja < d_a; ++ja)
        for (std::size_t ka = 0; ka < d_a; ++ka)
            for (std::size_t jb = 0; jb < d_b; ++jb)
                for (std::size_t kb = 0; kb < d_b; ++kb)
                    out(ka * d_b + jb, ja * d_b + kb) = a(ja * d_b + jb, ka * d_b + kb);
    return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b) {
    require_bipartite(a, d_a, d_b);
    ComplexMatrix out(a.dim());
    for (std::size_t ja = 0; ja < d_a; ++ja)
        for (std::size_t ka = 0; ka < d_a; ++ka)
            for (std::size_t jb = 0; jb < d_b; ++jb)
                for (std::size_t kb = 0; kb < d_b; ++kb)
                    out(ja * d_b + kb, ka * d_b + jb) = a(ja * d_b + jb, ka * d_b + kb);
    return out;
}

ComplexMatrix partial_transpose_3(const ComplexMatrix& a, std::size_t d_a, std::size_t d_b,
                                  std::size_t d_c) {
    if (d_a == 0 || d_b == 0 || d_c == 0)
        throw StructuralError("subsystem dimensions must be positive");
    if (a.dim() != d_a * d_b * d_c)
        throw StructuralError("matrix dimension does not equal d_a * d_b * d_c");
    ComplexMatrix out(a.dim());
    auto flat = [d_b, d_c](std::size_t x, std::size_t y, std::size_t z) {
        return (x * d_b + y) * d_c + z;
    };
    for (std::size_t ja = 0; ja < d_a; ++ja)
        for (std::size_t ka = 0; ka < d_a; ++ka)
            for (std::size_t jb = 0; jb < d_b; ++jb)
                for (std::size_t kb = 0; kb < d_b; ++kb)
                    for (std::size_t jc = 0; jc < d_c; ++jc)
                        for (std::size_t kc = 0; kc < d_c; ++kc)
                            out(flat(ja, kb, jc), flat(ka, jb, kc)) =
                                a(flat(ja, jb, jc), flat(ka, kb, kc));
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& a, const DimensionSpec& spec,
                                const TransposeMask& mask) {
    if (spec.total_dim() != a.dim())
        throw StructuralError("matrix dimension does not match the dimension list");
    if (mask.size() != spec.subsystem_count())
        throw StructuralError("mask length does not match the dimension list");

    const std::size_t d = a.dim();
    const std::size_t nss = spec.subsystem_count();
    ComplexMatrix out(d);
    std::vector<std::size_t> row(nss), col(nss);
    for (std::size_t r = 0; r < d; ++r) {
        multi_index_into(r, spec, row);
        for (std::size_t c = 0; c < d; ++c) {
            multi_index_into(c, spec, col);
            /* Source indices: swap the r/c components of every transposed
             * subsystem.  The map is an involution, so gathering with the
             * same swap scatters correctly too. */
            std::size_t sr = 0, sc = 0;
            for (std::size_t s = 0; s < nss; ++s) {
                const std::size_t stride = spec.stride(s);
                if (mask.transposed(s)) {
                    sr += col[s] * stride;
                    sc += row[s] * stride;
                } else {
                    sr += row[s] * stride;
                    sc += col[s] * stride;
                }
            }
            out(r, c) = a(sr, sc);
        }
    }
    return out;
}

}  // namespace qpt
