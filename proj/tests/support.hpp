#pragma once

/* Shared helpers for the unit and acceptance suites.  The partial
 * transposition oracles here are written straight from the bipartite and
 * tripartite element maps and composed one subsystem at a time; they share
 * no code with the library's single-pass implementation on purpose. */

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qpt/complex_matrix.hpp"
#include "qpt/density_matrix.hpp"
#include "qpt/indexing.hpp"
#include "qpt/states.hpp"

namespace support {

using qpt::ComplexMatrix;
using qpt::cplx;

inline bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        return false;
    return std::memcmp(a.entries().data(), b.entries().data(),
                       a.entries().size() * sizeof(cplx)) == 0;
}

inline ComplexMatrix oracle_pt_left(const ComplexMatrix& m, std::size_t da, std::size_t db) {
    ComplexMatrix out(m.dim());
    for (std::size_t ja = 0; ja < da; ++ja)
        for (std::size_t ka = 0; ka < da; ++ka)
            for (std::size_t jb = 0; jb < db; ++jb)
                for (std::size_t kb = 0; kb < db; ++kb)
                    out(ka * db + jb, ja * db + kb) = m(ja * db + jb, ka * db + kb);
    return out;
}

inline ComplexMatrix oracle_pt_right(const ComplexMatrix& m, std::size_t da, std::size_t db) {
    ComplexMatrix out(m.dim());
    for (std::size_t ja = 0; ja < da; ++ja)
        for (std::size_t ka = 0; ka < da; ++ka)
            for (std::size_t jb = 0; jb < db; ++jb)
                for (std::size_t kb = 0; kb < db; ++kb)
                    out(ja * db + kb, ka * db + jb) = m(ja * db + jb, ka * db + kb);
    return out;
}

inline ComplexMatrix oracle_pt_inner(const ComplexMatrix& m, std::size_t da, std::size_t db,
                                     std::size_t dc) {
    ComplexMatrix out(m.dim());
    auto flat = [db, dc](std::size_t x, std::size_t y, std::size_t z) {
        return (x * db + y) * dc + z;
    };
    for (std::size_t ja = 0; ja < da; ++ja)
        for (std::size_t ka = 0; ka < da; ++ka)
            for (std::size_t jb = 0; jb < db; ++jb)
                for (std::size_t kb = 0; kb < db; ++kb)
                    for (std::size_t jc = 0; jc < dc; ++jc)
                        for (std::size_t kc = 0; kc < dc; ++kc)
                            out(flat(ja, kb, jc), flat(ka, jb, kc)) =
                                m(flat(ja, jb, jc), flat(ka, kb, kc));
    return out;
}

/* Transpose over subsystem s alone by regrouping the others around it. */
inline ComplexMatrix oracle_pt_single(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                      std::size_t s) {
    std::size_t before = 1, after = 1;
    for (std::size_t t = 0; t < s; ++t)
        before *= dims[t];
    for (std::size_t t = s + 1; t < dims.size(); ++t)
        after *= dims[t];
    if (before == 1)
        return oracle_pt_left(m, dims[s], after);
    if (after == 1)
        return oracle_pt_right(m, before, dims[s]);
    return oracle_pt_inner(m, before, dims[s], after);
}

inline ComplexMatrix oracle_pt(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                               const std::vector<bool>& mask) {
    ComplexMatrix out = m;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (mask[s])
            out = oracle_pt_single(out, dims, s);
    return out;
}

inline ComplexMatrix random_complex(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim);
    for (cplx& z : m.entries())
        z = cplx{gauss(gen), gauss(gen)};
    return m;
}

/* Hermitian with an indefinite spectrum: (G + G^dag)/2, mirrored. */
inline ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    const ComplexMatrix g = random_complex(dim, seed);
    ComplexMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        h(r, r) = cplx{g(r, r).real(), 0.0};
        for (std::size_t c = r + 1; c < dim; ++c) {
            h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < da; ++j1)
            for (std::size_t i2 = 0; i2 < db; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    out(i1 * db + i2, j1 * db + j2) = a(i1, j1) * b(i2, j2);
    return out;
}

/* Random convex mixture of product states on (da, db); separable by
 * construction and exactly Hermitian. */
inline qpt::DensityMatrix random_separable(std::size_t da, std::size_t db, std::size_t terms,
                                           std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    std::vector<double> p(terms);
    double total = 0.0;
    for (double& x : p)
        total += (x = uni(gen));
    ComplexMatrix sum(da * db);
    const qpt::DimensionSpec spec_a({da}), spec_b({db});
    for (std::size_t i = 0; i < terms; ++i) {
        const qpt::DensityMatrix fa = qpt::random_density(spec_a, gen());
        const qpt::DensityMatrix fb = qpt::random_density(spec_b, gen());
        const ComplexMatrix term = kron(fa.matrix(), fb.matrix());
        const double weight = p[i] / total;
        auto ts = term.entries();
        auto ss = sum.entries();
        for (std::size_t k = 0; k < ss.size(); ++k)
            ss[k] += weight * ts[k];
    }
    return {std::move(sum), qpt::DimensionSpec({da, db})};
}

struct CommandResult {
    int exit_code;
    std::string output;
};

inline CommandResult run_command(const std::string& cmd) {
    const std::string full = cmd + " 2>&1";
    std::FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr)
        return {-1, "popen failed"};
    std::string output;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

inline std::string read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (f == nullptr)
        return {};
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0)
        out.append(buf, n);
    std::fclose(f);
    return out;
}

/* Extracts the value after "<key> = " in a report printout; NaN if absent. */
inline double parse_report_value(const std::string& text, const std::string& key) {
    const std::string needle = key + " = ";
    const std::size_t at = text.find(needle);
    if (at == std::string::npos)
        return std::numeric_limits<double>::quiet_NaN();
    return std::strtod(text.c_str() + at + needle.size(), nullptr);
}

}  // namespace support
