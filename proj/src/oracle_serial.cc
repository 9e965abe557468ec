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

// Single-threaded reference for the quadrature kernels in oracle.cc. The
// arithmetic is kept operation-for-operation identical so that the parallel
// results can be compared bit for bit.

#include <cmath>

#include "oracle_internal.h"
#include "sympcov/errors.h"
#include "sympcov/oracle.h"

namespace sympcov::serial {

namespace {

SampledWavefunction evaluate(const KernelSpec& spec, const Grid& grid) {
    const detail::PropagationPlan plan = detail::plan_propagation(spec, grid);
    const std::size_t n = plan.n;
    SampledWavefunction psi{grid, std::vector<Complex>(plan.output_size())};
    for (std::size_t out = 0; out < plan.output_size(); ++out) {
        const double* k = &plan.output_wavevectors[out * n];
        double re = 0.0;
        double im = 0.0;
        for (std::size_t in = 0; in < plan.input_size(); ++in) {
            const double* xp = &plan.input_coords[in * n];
            double phase = 0.0;
            for (std::size_t d = 0; d < n; ++d) phase += xp[d] * k[d];
            const double c = std::cos(phase);
            const double s = std::sin(phase);
            const Complex& g = plan.input_weights[in];
            re += g.real() * c + g.imag() * s;
            im += g.imag() * c - g.real() * s;
        }
        psi.values[out] = plan.output_prefactors[out] * Complex(re, im);
    }
    return psi;
}

}  // namespace

SampledWavefunction propagate_vacuum(const KernelSpec& spec, const Grid& grid) {
    SampledWavefunction psi = evaluate(spec, grid);
    if (max_abs(grid.center) == 0.0) detail::check_norm(psi);
    return psi;
}

Complex numeric_amplitude(const KernelSpec& spec, const WeylLabel& w, const Grid& grid) {
    const std::size_t n = spec.modes();
    if (w.a.size() != static_cast<Eigen::Index>(n) || w.b.size() != static_cast<Eigen::Index>(n)) {
        throw DimensionError("Weyl label must have n entries per half");
    }
    const SampledWavefunction psi = serial::propagate_vacuum(spec, centered_grid(n, grid.points, grid.extent));
    const SampledWavefunction shifted = evaluate(spec, detail::shifted_grid(psi.grid, w.b));

    Complex total(0.0, 0.0);
    double x[2];
    for (std::size_t i = 0; i < psi.values.size(); ++i) {
        detail::node_coordinates(psi.grid, n, i, x);
        double phase = 0.0;
        for (std::size_t d = 0; d < n; ++d) phase += w.a(static_cast<Eigen::Index>(d)) * x[d];
        total += detail::node_weight(psi.grid, n, i) * std::conj(psi.values[i]) *
                 std::polar(1.0, phase / spec.hbar()) * shifted.values[i];
    }
    return std::polar(1.0, w.a.dot(w.b) / (2.0 * spec.hbar())) * total;
}

}  // namespace sympcov::serial
