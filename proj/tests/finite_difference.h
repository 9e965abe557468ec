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

#ifndef SYMPCOV_TESTS_FINITE_DIFFERENCE_H
#define SYMPCOV_TESTS_FINITE_DIFFERENCE_H

// Central finite-difference derivatives of a scalar function of the stacked
// Weyl label z = (a, b). Used as an independent check on moments computed in
// closed form; nothing here touches covariance matrices.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sympcov/symplectic.h"

namespace sympcov::testing {

using ScalarField = std::function<double(const Vector&)>;

/// Central stencil for the k-th derivative, k <= 4, as (offset, weight) pairs
/// in units of the step h; the derivative is sum weight * f(offset h) / h^k.
inline std::vector<std::pair<int, double>> central_stencil(unsigned k) {
    switch (k) {
        case 0: return {{0, 1.0}};
        case 1: return {{-1, -0.5}, {1, 0.5}};
        case 2: return {{-1, 1.0}, {0, -2.0}, {1, 1.0}};
        case 3: return {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}};
        case 4: return {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}};
        default: throw std::invalid_argument("stencil order above 4");
    }
}

/// Mixed partial derivative d^{orders} f at the origin, from the tensor
/// product of one-dimensional central stencils.
inline double mixed_derivative(const ScalarField& f, const std::vector<unsigned>& orders, double h) {
    const std::size_t dim = orders.size();
    std::vector<std::vector<std::pair<int, double>>> stencils;
    unsigned total = 0;
    for (unsigned k : orders) {
        stencils.push_back(central_stencil(k));
        total += k;
    }
    std::vector<std::size_t> pos(dim, 0);
    double sum = 0.0;
    Vector z(static_cast<Eigen::Index>(dim));
    while (true) {
        double weight = 1.0;
        for (std::size_t d = 0; d < dim; ++d) {
            z(static_cast<Eigen::Index>(d)) = stencils[d][pos[d]].first * h;
            weight *= stencils[d][pos[d]].second;
        }
        sum += weight * f(z);
        std::size_t d = 0;
        while (d < dim && ++pos[d] == stencils[d].size()) pos[d++] = 0;
        if (d == dim) break;
    }
    return sum / std::pow(h, static_cast<double>(total));
}

}  // namespace sympcov::testing

#endif  // SYMPCOV_TESTS_FINITE_DIFFERENCE_H
