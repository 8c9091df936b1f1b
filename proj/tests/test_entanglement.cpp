#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "qpt/density_matrix.hpp"
#include "qpt/entanglement.hpp"
#include "qpt/errors.hpp"
#include "qpt/partial_transpose.hpp"
#include "qpt/spectra.hpp"
#include "qpt/states.hpp"

#include "support.hpp"

using namespace qpt;

TEST_CASE("ppt verdicts") {
    const TransposeMask second = TransposeMask::single(2, 1);

    const PptVerdict bell = ppt_verdict(bell_phi_plus(), second);
    CHECK(bell.npt_entangled);
    CHECK(std::abs(bell.min_eigenvalue + 0.5) <= 1e-12);

    /* |01><01| stays positive under every partial transposition. */
    ComplexMatrix product(4);
    product(1, 1) = cplx{1.0, 0.0};
    const PptVerdict sep = ppt_verdict(DensityMatrix(product, DimensionSpec({2, 2})), second);
    CHECK_FALSE(sep.npt_entangled);
    CHECK(std::abs(sep.min_eigenvalue) <= 1e-14);

    const PptVerdict weak = ppt_verdict(werner(2, 0.2), second);
    CHECK_FALSE(weak.npt_entangled);
    CHECK(std::abs(weak.min_eigenvalue - 0.1) <= 1e-12);
}

TEST_CASE("negativity and log-negativity") {
    const DensityMatrix bell = bell_phi_plus();
    const ComplexMatrix pt = partial_transpose_b(bell.matrix(), 2, 2);
    CHECK(std::abs(negativity(pt) - 0.5) <= 1e-12);
    CHECK(std::abs(log_negativity(pt) - 1.0) <= 1e-12);

    const TransposeMask first = TransposeMask::single(2, 0);
    for (int i = 0; i <= 10; ++i) {
        const double w = static_cast<double>(i) / 10.0;
        const double expected = std::max(0.0, (3.0 * w - 1.0) / 4.0);
        CHECK(std::abs(negativity(werner(2, w), first) - expected) <= 1e-10);
    }

    /* Equals (trace norm - 1)/2 on the same input. */
    std::mt19937_64 gen(61);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_density(DimensionSpec({2, 3}), gen());
        const ComplexMatrix rpt = partial_transpose(rho.matrix(), rho.spec(), first);
        CHECK(std::abs(negativity(rpt) - (trace_norm_hermitian(rpt) - 1.0) / 2.0) <= 1e-10);
    }

    ComplexMatrix twice = ComplexMatrix::identity(2);
    CHECK_THROWS_AS((void)negativity(twice), ContractViolation);
}

TEST_CASE("spectrum classification") {
    const EigClassification cls = classify_spectrum({0.5, 0.5, 0.5, -0.5}, 2e-12);
    CHECK(cls.positives == std::vector<double>{0.5, 0.5, 0.5});
    CHECK(cls.negatives == std::vector<double>{-0.5});
    CHECK(cls.zero_count == 0);

    const EigClassification with_zeros = classify_spectrum({0.6, 0.4, 1e-15, -1e-15}, 1e-12);
    CHECK(with_zeros.d_plus() == 2);
    CHECK(with_zeros.d_minus() == 0);
    CHECK(with_zeros.zero_count == 2);

    CHECK_THROWS_AS((void)classify_spectrum({0.1, 0.2}, 1e-12), std::invalid_argument);
}

TEST_CASE("cut point search") {
    const HseCutPoint bell = hse_cut_point({0.5, 0.5, 0.5});
    CHECK(bell.d_plus_prime == 3);
    CHECK(bell.xi == 0.0);

    /* Dyadic inputs keep the partial sums exact, so xi is exact too. */
    const HseCutPoint werner_like = hse_cut_point({0.375, 0.375, 0.375});
    CHECK(werner_like.d_plus_prime == 3);
    CHECK(werner_like.xi == 0.25);

    const HseCutPoint seven = hse_cut_point({0.3125, 0.3125, 0.3125, 0.0625, 0.0625, 0.0625, 0.0625});
    CHECK(seven.d_plus_prime == 5);
    CHECK(seven.xi == 0.0);

    /* Sums at or below one signal the no-cut case. */
    const HseCutPoint flat = hse_cut_point({0.25, 0.25, 0.25, 0.25});
    CHECK(flat.d_plus_prime == 5);
    CHECK(flat.xi == 0.0);
    const HseCutPoint under = hse_cut_point({0.3, 0.3});
    CHECK(under.d_plus_prime == 3);
    CHECK(under.xi == 0.0);

    CHECK_THROWS_AS((void)hse_cut_point({0.5, -0.1}), ContractViolation);
    CHECK_THROWS_AS((void)hse_cut_point({0.4, 0.8}), ContractViolation);
}

TEST_CASE("simplex projection") {
    const SimplexProjection bell = simplex_projection_distance({0.5, 0.5, 0.5, -0.5});
    CHECK(std::abs(bell.distance - 1.0 / std::sqrt(3.0)) <= 1e-15);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::abs(bell.projected[j] - 1.0 / 3.0) <= 1e-15);
    CHECK(bell.projected[3] == 0.0);

    const SimplexProjection wern = simplex_projection_distance({0.375, 0.375, 0.375, -0.125});
    CHECK(std::abs(wern.distance - 0.125 / std::sqrt(3.0) * 2.0) <= 1e-15);

    const SimplexProjection onit = simplex_projection_distance({0.7, 0.3});
    CHECK(onit.distance == 0.0);
    CHECK(onit.projected == std::vector<double>{0.7, 0.3});
}

TEST_CASE("Hilbert-Schmidt measure of the Bell state") {
    const DensityMatrix bell = bell_phi_plus();
    const TransposeMask second = TransposeMask::single(2, 1);
    const HseReport rep = hse(bell, second, true);

    CHECK(std::abs(rep.e_hs - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(rep.e_hs - rep.e_hs_tail_form) <= 1e-12);
    CHECK(rep.d_plus_prime == 3);
    CHECK(std::abs(rep.xi) <= 1e-12);
    CHECK(rep.classification.d_plus() == 3);
    CHECK(rep.classification.d_minus() == 1);
    CHECK(std::abs(rep.oracle_lower_bound - 1.0 / std::sqrt(3.0)) <= 1e-12);
    CHECK_FALSE(rep.trace_anomaly);

    REQUIRE(rep.css.has_value());
    CHECK(std::abs(hs_norm(bell.matrix() - rep.css->matrix()) - rep.e_hs) <= 1e-9);
    REQUIRE(rep.css_min_eigenvalue.has_value());

    /* Undoing the transposition recovers a unit-trace PSD operator. */
    const ComplexMatrix xi_op = partial_transpose(rep.css->matrix(), rep.css->spec(), second);
    CHECK(std::abs(trace(xi_op).real() - 1.0) <= 1e-9);
    CHECK(eig_hermitian(xi_op).eigenvalues.back() >= -1e-10);
}

TEST_CASE("three-qubit Werner state against a ququart") {
    const DensityMatrix cube = werner(3, 0.5);
    const DensityMatrix grouped(cube.matrix(), DimensionSpec({2, 4}));
    const HseReport rep = hse(grouped, TransposeMask::single(2, 0), false);
    CHECK(std::abs(rep.e_hs - std::sqrt(3.0) / 8.0) <= 1e-9);
    CHECK(rep.d_plus_prime == 5);
    CHECK(std::abs(rep.xi) <= 1e-9);
    CHECK(rep.classification.d_plus() == 7);
    CHECK(rep.classification.d_minus() == 1);
    CHECK(std::abs(negativity(grouped, TransposeMask::single(2, 0)) - 0.1875) <= 1e-10);
}

TEST_CASE("separable states report zero") {
    const TransposeMask first = TransposeMask::single(2, 0);
    const HseReport rep = hse(werner(2, 0.2), first, true);
    CHECK(rep.e_hs == 0.0);
    CHECK(rep.d_plus_prime == rep.classification.d_plus() + 1);
    CHECK(rep.xi == 0.0);
    CHECK(rep.oracle_lower_bound == 0.0);
    REQUIRE(rep.css.has_value());
    CHECK(support::bitwise_equal(rep.css->matrix(), werner(2, 0.2).matrix()));
    CHECK(std::abs(negativity(werner(2, 0.2), first)) == 0.0);
}

TEST_CASE("contracts and bipartition enforcement") {
    const ComplexMatrix twice = ComplexMatrix::identity(4);
    CHECK_THROWS_AS((void)hse(twice), ContractViolation);

    const DensityMatrix cube = werner(3, 0.5);
    CHECK_THROWS_AS((void)hse(cube, TransposeMask::single(3, 0), false), StructuralError);
}

TEST_CASE("negativity zero exactly when the verdict is PPT") {
    std::mt19937_64 gen(67);
    const TransposeMask second = TransposeMask::single(2, 1);
    int entangled = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const DensityMatrix rho = (trial % 3 == 0)
                                      ? support::random_separable(2, 2, 4, gen())
                                      : random_density(DimensionSpec({2, 2}), gen());
        const PptVerdict verdict = ppt_verdict(rho, second);
        const double e_n = negativity(rho, second);
        if (verdict.npt_entangled) {
            CHECK(e_n > 0.0);
            ++entangled;
        } else {
            CHECK(e_n == 0.0);
        }
    }
    CHECK(entangled > 0);
}

TEST_CASE("measure dominates the projection bound and tracks the distance") {
    std::mt19937_64 gen(71);
    const TransposeMask second = TransposeMask::single(2, 1);
    const std::vector<std::vector<std::size_t>> shapes = {{2, 2}, {2, 3}, {3, 3}};
    for (const auto& dims : shapes) {
        for (int trial = 0; trial < 12; ++trial) {
            const DensityMatrix rho = random_density(DimensionSpec(dims), gen());
            const HseReport rep = hse(rho, second, true);
            CHECK(rep.e_hs >= rep.oracle_lower_bound - 1e-9);
            CHECK(std::abs(rep.e_hs - rep.e_hs_tail_form) <= 1e-9);
            REQUIRE(rep.css.has_value());
            CHECK(std::abs(hs_norm(rho.matrix() - rep.css->matrix()) - rep.e_hs) <= 1e-9);
            if (negativity(rho, second) > 1e-8)
                CHECK(rep.e_hs > 0.0);
        }
    }
}

TEST_CASE("partial transpose eigenvalues stay within the universal bounds") {
    std::mt19937_64 gen(73);
    const TransposeMask second = TransposeMask::single(2, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_density(DimensionSpec({2, 2}), gen());
        const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.spec(), second);
        const SpectralDecomposition sd = eig_hermitian(pt);
        CHECK(sd.eigenvalues.front() <= 1.0 + 1e-9);
        CHECK(sd.eigenvalues.back() >= -0.5 - 1e-9);
    }
}
