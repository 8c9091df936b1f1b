#include "qpt/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace qpt {

DensityMatrix bell_phi_plus() {
    return ghz(2);
}

DensityMatrix ghz(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("GHZ needs at least two qubits");
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix m(d);
    const cplx half{0.5, 0.0};
    m(0, 0) = half;
    m(0, d - 1) = half;
    m(d - 1, 0) = half;
    m(d - 1, d - 1) = half;
    return {std::move(m), DimensionSpec(std::vector<std::size_t>(n, 2))};
}

DensityMatrix werner(std::size_t n, double w) {
    if (!(w >= 0.0 && w <= 1.0))
        throw std::invalid_argument("mixing weight must lie in [0, 1]");
    DensityMatrix pure = ghz(n);
    const std::size_t d = pure.matrix().dim();
    ComplexMatrix m = cplx{w, 0.0} * pure.matrix();
    const double uniform = (1.0 - w) / static_cast<double>(d);
    for (std::size_t j = 0; j < d; ++j)
        m(j, j) += uniform;
    return {std::move(m), pure.spec()};
}

DensityMatrix random_density(const DimensionSpec& spec, std::uint64_t seed) {
    const std::size_t d = spec.total_dim();
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    ComplexMatrix g(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const double re = gauss(gen);
            const double im = gauss(gen);
            g(r, c) = cplx{re, im};
        }

    /* G G^dag, upper triangle mirrored so the result is exactly Hermitian
     * with a real diagonal; scaling by the real trace keeps it that way. */
    ComplexMatrix h(d);
    for (std::size_t r = 0; r < d; ++r) {
        double diag = 0.0;
        for (std::size_t l = 0; l < d; ++l)
            diag += std::norm(g(r, l));
        h(r, r) = cplx{diag, 0.0};
        for (std::size_t c = r + 1; c < d; ++c) {
            cplx z{0.0, 0.0};
            for (std::size_t l = 0; l < d; ++l)
                z += g(r, l) * std::conj(g(c, l));
            h(r, c) = z;
            h(c, r) = std::conj(z);
        }
    }
    double tr = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        tr += h(j, j).real();
    const double inv = 1.0 / tr;
    for (cplx& z : h.entries())
        z *= inv;
    return {std::move(h), spec};
}

}  // namespace qpt
