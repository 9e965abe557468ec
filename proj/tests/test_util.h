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

#ifndef SYMPCOV_TESTS_TEST_UTIL_H
#define SYMPCOV_TESTS_TEST_UTIL_H

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sympcov/covariance.h"
#include "sympcov/symplectic.h"

namespace sympcov::testing {

inline Eigen::Matrix2d rotation2(double theta) {
    return (Eigen::Matrix2d() << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)).finished();
}

/// Interleaved two-mode squeezer [[cosh r I, sinh r Z], [sinh r Z, cosh r I]], Z = diag(1, -1).
inline Matrix two_mode_squeezer(double r) {
    const Eigen::Matrix2d z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
    Matrix m(4, 4);
    m << std::cosh(r) * Eigen::Matrix2d::Identity(), std::sinh(r) * z, std::sinh(r) * z,
        std::cosh(r) * Eigen::Matrix2d::Identity();
    return m;
}

/// Interleaved beamsplitter [[c I, s I], [-s I, c I]].
inline Matrix beamsplitter(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Matrix m(4, 4);
    m << c * Eigen::Matrix2d::Identity(), s * Eigen::Matrix2d::Identity(), -s * Eigen::Matrix2d::Identity(),
        c * Eigen::Matrix2d::Identity();
    return m;
}

/// Random element of Sp(2, R) as a 2x2 block: rotation * diag(s, 1/s) * rotation.
inline Eigen::Matrix2d random_sp2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
    std::uniform_real_distribution<double> log_s(-1.0, 1.0);
    const double s = std::exp(log_s(rng));
    const Eigen::Matrix2d squeeze = Eigen::Vector2d(s, 1.0 / s).asDiagonal();
    return rotation2(angle(rng)) * squeeze * rotation2(angle(rng));
}

/// Interleaved blockdiag(A_11, ..., A_nn) with random Sp(2, R) blocks.
inline Matrix random_block_diagonal(std::size_t n, std::mt19937_64& rng) {
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Matrix m = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < n; ++k) m.block<2, 2>(2 * k, 2 * k) = random_sp2(rng);
    return m;
}

inline OscillatorSystem random_system(std::size_t n, std::mt19937_64& rng, bool random_hbar = true) {
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::vector<double> masses;
    std::vector<double> freqs;
    for (std::size_t k = 0; k < n; ++k) {
        masses.push_back(u(rng));
        freqs.push_back(u(rng));
    }
    return OscillatorSystem(random_hbar ? u(rng) : 1.0, masses, freqs);
}

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = u(rng);
    return m;
}

}  // namespace sympcov::testing

#endif  // SYMPCOV_TESTS_TEST_UTIL_H
