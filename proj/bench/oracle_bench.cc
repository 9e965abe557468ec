// Copyright 2026 The sympcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels for the quadrature oracle.

#include <benchmark/benchmark.h>

#include "sympcov/oracle.h"

namespace {

using namespace sympcov;

struct Fixture {
    SymplecticMatrix m;
    OscillatorSystem sys;
    KernelSpec spec;
    WeylLabel w;

    explicit Fixture(std::size_t n)
        : m(SymplecticMatrix::create(canonical_form(n, Ordering::kGrouped), Ordering::kGrouped) *
            generate_random(n, 0.2, 11)),
          sys(OscillatorSystem::unit(n)),
          spec(m, sys),
          w{Vector::Constant(static_cast<Eigen::Index>(n), 0.3), Vector::Constant(static_cast<Eigen::Index>(n), -0.2)} {}
};

Grid grid_for(std::size_t n, std::size_t points) { return centered_grid(n, points, n == 1 ? 16.0 : 10.0); }

template <bool Parallel>
void BM_propagate_vacuum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Fixture f(n);
    const Grid grid = grid_for(n, static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        auto psi = Parallel ? propagate_vacuum(f.spec, grid) : serial::propagate_vacuum(f.spec, grid);
        benchmark::DoNotOptimize(psi.values.data());
    }
}

template <bool Parallel>
void BM_numeric_amplitude(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Fixture f(n);
    const Grid grid = grid_for(n, static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        Complex z = Parallel ? numeric_amplitude(f.spec, f.w, grid) : serial::numeric_amplitude(f.spec, f.w, grid);
        benchmark::DoNotOptimize(z);
    }
}

void grid_sizes(benchmark::internal::Benchmark* b) {
    b->Args({1, 1024})->Args({1, 2048})->Args({1, 4096})->Args({2, 64})->Args({2, 80});
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_propagate_vacuum<false>)->Name("propagate_vacuum/serial")->Apply(grid_sizes);
BENCHMARK(BM_propagate_vacuum<true>)->Name("propagate_vacuum/openmp")->Apply(grid_sizes);
BENCHMARK(BM_numeric_amplitude<false>)->Name("numeric_amplitude/serial")->Apply(grid_sizes);
BENCHMARK(BM_numeric_amplitude<true>)->Name("numeric_amplitude/openmp")->Apply(grid_sizes);

}  // namespace

BENCHMARK_MAIN();
