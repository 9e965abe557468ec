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

#ifndef SYMPCOV_SRC_ORACLE_INTERNAL_H
#define SYMPCOV_SRC_ORACLE_INTERNAL_H

#include <vector>

#include "sympcov/oracle.h"

namespace sympcov::detail {

/// Precomputed factors of Psi(x) = N e^{i x.DB^{-1}x / 2hbar} sum_x' g(x') e^{-i x'.k(x)}
/// with g(x') = weight(x') psi_0(x') e^{i x'.B^{-1}A x' / 2hbar} and k(x) = B^{-1} x / hbar.
/// Coordinates and wave vectors are stored n per node.
struct PropagationPlan {
    std::size_t n = 0;
    std::vector<double> input_coords;
    std::vector<Complex> input_weights;
    std::vector<double> output_wavevectors;
    std::vector<Complex> output_prefactors;

    std::size_t input_size() const { return input_weights.size(); }
    std::size_t output_size() const { return output_prefactors.size(); }
};

/// Validates the grid against the kernel and builds the plan. The quadrature
/// grid is `grid` recentred at the origin; the output nodes are `grid`'s own.
PropagationPlan plan_propagation(const KernelSpec& spec, const Grid& grid);

/// Flattened node index -> per-axis coordinates.
void node_coordinates(const Grid& grid, std::size_t n, std::size_t node, double* out);
double node_weight(const Grid& grid, std::size_t n, std::size_t node);

/// Throws ResolutionError when a centered wavefunction's norm is off by more
/// than kNormTolerance.
void check_norm(const SampledWavefunction& psi);

/// `grid` translated by b.
Grid shifted_grid(const Grid& grid, const Vector& b);

}  // namespace sympcov::detail

#endif  // SYMPCOV_SRC_ORACLE_INTERNAL_H
