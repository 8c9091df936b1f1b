#pragma once

#include <cstddef>
#include <cstdint>

#include "qpt/density_matrix.hpp"

namespace qpt {

/* |phi+><phi+| on two qubits, spec (2, 2). */
DensityMatrix bell_phi_plus();

/* n-qubit GHZ projector, spec (2, ..., 2); n >= 2. */
DensityMatrix ghz(std::size_t n);

/* w * GHZ(n) + (1 - w) * I / 2^n for w in [0, 1]. */
DensityMatrix werner(std::size_t n, double w);

/* G G^dag / tr(G G^dag) with independent complex Gaussian entries in G;
 * deterministic for a given seed, full rank almost surely. */
DensityMatrix random_density(const DimensionSpec& spec, std::uint64_t seed);

}  // namespace qpt
