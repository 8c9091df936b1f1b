#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "qpt/density_matrix.hpp"
#include "qpt/entanglement.hpp"
#include "qpt/indexing.hpp"
#include "qpt/partial_transpose.hpp"
#include "qpt/spectra.hpp"
#include "qpt/states.hpp"

namespace {

using qpt::DensityMatrix;
using qpt::DimensionSpec;
using qpt::TransposeMask;

struct Shape {
    const char* name;
    std::vector<std::size_t> dims;
};

const std::vector<Shape>& shapes() {
    static const std::vector<Shape> table = {
        {"2x2", {2, 2}},
        {"2x2x2", {2, 2, 2}},
        {"2x3x4", {2, 3, 4}},
        {"8x8", {8, 8}},
    };
    return table;
}

void BM_partial_transpose(benchmark::State& state) {
    const Shape& shape = shapes()[static_cast<std::size_t>(state.range(0))];
    const DimensionSpec spec(shape.dims);
    const DensityMatrix rho = qpt::random_density(spec, 7);
    const TransposeMask mask = TransposeMask::single(shape.dims.size(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpt::partial_transpose(rho.matrix(), spec, mask));
    }
    state.SetLabel(shape.name);
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(spec.total_dim() * spec.total_dim()));
}
BENCHMARK(BM_partial_transpose)->DenseRange(0, 3);

void BM_eig_hermitian(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const DensityMatrix rho = qpt::random_density(DimensionSpec({d}), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpt::eig_hermitian(rho.matrix()));
    }
}
BENCHMARK(BM_eig_hermitian)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_negativity(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const DensityMatrix rho = qpt::random_density(DimensionSpec({d, d}), 13);
    const TransposeMask second = TransposeMask::single(2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpt::negativity(rho, second));
    }
}
BENCHMARK(BM_negativity)->Arg(2)->Arg(3)->Arg(4);

void BM_hse(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const DensityMatrix rho = qpt::random_density(DimensionSpec({d, d}), 17);
    const TransposeMask second = TransposeMask::single(2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpt::hse(rho, second, true));
    }
}
BENCHMARK(BM_hse)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
