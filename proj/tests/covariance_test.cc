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

#include "sympcov/covariance.h"

#include <cmath>
#include <random>

#include "finite_difference.h"
#include "gtest/gtest.h"
#include "sympcov/errors.h"
#include "test_util.h"

using namespace sympcov;
using sympcov::testing::mixed_derivative;
using sympcov::testing::random_system;
using sympcov::testing::two_mode_squeezer;

namespace {

WeylLabel label(std::initializer_list<double> a, std::initializer_list<double> b) {
    WeylLabel w{Vector(static_cast<Eigen::Index>(a.size())), Vector(static_cast<Eigen::Index>(b.size()))};
    Eigen::Index k = 0;
    for (double v : a) w.a(k++) = v;
    k = 0;
    for (double v : b) w.b(k++) = v;
    return w;
}

sympcov::testing::ScalarField amplitude_field(const SymplecticMatrix& m, const OscillatorSystem& sys) {
    const auto n = static_cast<Eigen::Index>(m.modes());
    return [m, sys, n](const Vector& z) { return amplitude(m, sys, WeylLabel{z.head(n), z.tail(n)}); };
}

}  // namespace

TEST(OscillatorSystem, lengths) {
    const OscillatorSystem sys(2.0, {1.0, 4.0}, {0.5, 2.0});
    const Vector l = sys.lengths();
    EXPECT_DOUBLE_EQ(l(0), 2.0);
    EXPECT_DOUBLE_EQ(l(1), 0.5);
    EXPECT_DOUBLE_EQ(OscillatorSystem::with_lengths(1.0, {2.0}).lengths()(0), 2.0);
}

TEST(OscillatorSystem, rejects_bad_parameters) {
    EXPECT_THROW(OscillatorSystem(0.0, {1.0}, {1.0}), InvalidArgumentError);
    EXPECT_THROW(OscillatorSystem(1.0, {-1.0}, {1.0}), InvalidArgumentError);
    EXPECT_THROW(OscillatorSystem(1.0, {1.0}, {std::nan("")}), InvalidArgumentError);
    EXPECT_THROW(OscillatorSystem(1.0, {1.0, 1.0}, {1.0}), DimensionError);
    EXPECT_THROW(OscillatorSystem(1.0, {}, {}), DimensionError);
}

TEST(CovarianceMatrix, symmetrizes_and_checks_positivity) {
    Matrix v(2, 2);
    v << 1.0, 0.2, 0.2 + 1e-15, 1.0;
    const CovarianceMatrix cov(v, Ordering::kGrouped, Units::kQuadrature);
    EXPECT_EQ(cov.data()(0, 1), cov.data()(1, 0));
    EXPECT_THROW(CovarianceMatrix(Matrix::Zero(2, 2), Ordering::kGrouped, Units::kQuadrature), DegeneracyError);
    EXPECT_THROW(CovarianceMatrix((Matrix(2, 2) << 1, 1, 1, 1).finished(), Ordering::kGrouped, Units::kQuadrature),
                 DegeneracyError);
    EXPECT_THROW(CovarianceMatrix(Matrix::Identity(3, 3), Ordering::kGrouped, Units::kQuadrature), DimensionError);
}

TEST(lambda_matrix, identity_unit_lengths) {
    const Matrix lambda = lambda_matrix(SymplecticMatrix::identity(1), OscillatorSystem::unit(1));
    EXPECT_EQ(lambda, Matrix::Identity(2, 2));
}

TEST(lambda_matrix, identity_length_two) {
    const Matrix lambda = lambda_matrix(SymplecticMatrix::identity(1), OscillatorSystem::with_lengths(1.0, {2.0}));
    EXPECT_NEAR(lambda(0, 0), 4.0, 1e-15);
    EXPECT_NEAR(lambda(1, 1), 0.25, 1e-15);
    EXPECT_EQ(lambda(0, 1), 0.0);
}

TEST(lambda_matrix, random_is_symmetric_positive_definite) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = generate_random(2, 1.0, rng());
        const Matrix lambda = lambda_matrix(m, random_system(2, rng));
        EXPECT_EQ(lambda, lambda.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> eig(lambda);
        EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
    }
}

TEST(lambda_matrix, errors) {
    EXPECT_THROW(lambda_matrix(SymplecticMatrix::identity(2), OscillatorSystem::unit(1)), DimensionError);
    EXPECT_THROW(lambda_matrix(SymplecticMatrix::identity(1, Ordering::kInterleaved), OscillatorSystem::unit(1)),
                 OrderingError);
}

TEST(amplitude, closed_form_values) {
    const auto id = SymplecticMatrix::identity(1);
    const auto unit = OscillatorSystem::unit(1);
    EXPECT_EQ(amplitude(id, unit, label({0.0}, {0.0})), 1.0);
    EXPECT_DOUBLE_EQ(amplitude(id, unit, label({2.0}, {0.0})), std::exp(-1.0));
    EXPECT_NEAR(amplitude(id, unit, label({2.0}, {0.0})), 0.367879441, 1e-9);
    EXPECT_DOUBLE_EQ(amplitude(id, unit, label({1.0}, {1.0})), std::exp(-0.5));
    EXPECT_THROW(amplitude(id, unit, label({1.0, 2.0}, {0.0, 0.0})), DimensionError);
}

TEST(amplitude, bounded_and_monotone_along_rays) {
    std::mt19937_64 rng(19);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto m = generate_random(n, 0.8, rng());
        const auto sys = random_system(n, rng);
        const auto nn = static_cast<Eigen::Index>(n);
        WeylLabel dir{Vector(nn), Vector(nn)};
        for (Eigen::Index k = 0; k < nn; ++k) {
            dir.a(k) = g(rng);
            dir.b(k) = g(rng);
        }
        double previous = 1.0;
        for (double t = 0.1; t < 3.0; t += 0.1) {
            const double v = amplitude(m, sys, WeylLabel{t * dir.a, t * dir.b});
            EXPECT_GT(v, 0.0);
            EXPECT_LT(v, 1.0);
            EXPECT_LT(v, previous);
            previous = v;
        }
    }
}

TEST(covariance_physical, vacuum) {
    const auto v = covariance_physical(SymplecticMatrix::identity(1), OscillatorSystem::unit(1));
    EXPECT_EQ(v.units(), Units::kPhysical);
    EXPECT_EQ(v.data(), 0.5 * Matrix::Identity(2, 2));
}

TEST(covariance_physical, vacuum_length_two) {
    const auto v = covariance_physical(SymplecticMatrix::identity(1), OscillatorSystem::with_lengths(1.0, {2.0}));
    EXPECT_NEAR(v.data()(0, 0), 2.0, 1e-15);
    EXPECT_NEAR(v.data()(1, 1), 0.125, 1e-15);
}

TEST(covariance_physical, unit_system_matches_quadrature) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto m = generate_random(1 + seed % 4, 1.0, seed);
        const auto phys = covariance_physical(m, OscillatorSystem::unit(m.modes()));
        const auto quad = covariance_quadrature(m);
        EXPECT_LE(max_abs(phys.data() - quad.data()), 1e-14);
    }
}

TEST(covariance_physical, matches_second_derivatives_of_amplitude) {
    // <z_i z_j>_sym = -hbar^2 d^2/dz_i dz_j <W(z)> at z = 0, step 1e-3.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto m = generate_random(n, 0.4, rng());
        const auto sys = random_system(n, rng);
        const auto v = covariance_physical(m, sys);
        const auto f = amplitude_field(m, sys);
        const double hbar2 = sys.hbar() * sys.hbar();
        for (std::size_t i = 0; i < 2 * n; ++i) {
            for (std::size_t j = 0; j < 2 * n; ++j) {
                std::vector<unsigned> orders(2 * n, 0);
                ++orders[i];
                ++orders[j];
                const double fd = -hbar2 * mixed_derivative(f, orders, 1e-3);
                const double exact = v.data()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                EXPECT_LT(std::abs(fd - exact), 1e-5 * std::abs(exact)) << "entry " << i << "," << j;
            }
        }
    }
}

TEST(covariance_quadrature, identity_and_single_mode_squeeze) {
    EXPECT_EQ(covariance_quadrature(SymplecticMatrix::identity(3)).data(), 0.5 * Matrix::Identity(6, 6));
    const Matrix m = (Matrix(2, 2) << 0.5, 0.0, 0.0, 2.0).finished();
    const auto v = covariance_quadrature(SymplecticMatrix::create(m, Ordering::kGrouped));
    EXPECT_EQ(v.data()(0, 0), 0.125);
    EXPECT_EQ(v.data()(1, 1), 2.0);
    EXPECT_EQ(v.data()(0, 1), 0.0);
}

TEST(covariance_quadrature, nonconnected_block_structure) {
    const Matrix b = (Matrix(2, 2) << 1.0, 0.4, -0.7, 2.0).finished();
    const auto v = covariance_quadrature(make_nonconnected(b));
    const Matrix bbt = b * b.transpose();
    EXPECT_LE(max_abs(v.data().topLeftCorner(2, 2) - 0.5 * bbt), 1e-14);
    EXPECT_LE(max_abs(v.data().bottomRightCorner(2, 2) - 0.5 * bbt.inverse()), 1e-14);
    EXPECT_EQ(max_abs(v.data().topRightCorner(2, 2)), 0.0);
}

TEST(covariance_quadrature, lambda_q_is_symplectic) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto m = generate_random(1 + seed % 4, 1.0, seed);
        EXPECT_TRUE(quadrature_lambda_check(m, 1e-9).is_symplectic);
        EXPECT_NEAR((2.0 * covariance_quadrature(m).data()).determinant(), 1.0, 1e-9);
    }
}

TEST(covariance_interleaved, single_mode_identity) {
    const auto m = generate_random(1, 1.0, 4);
    const auto v = covariance_quadrature(m);
    EXPECT_EQ(covariance_interleaved(v, ModeInterleaver(1)).data(), v.data());
}

TEST(covariance_interleaved, two_mode_squeezer_coupling_block) {
    const double r = 0.6;
    const auto grouped = convert_ordering(SymplecticMatrix::create(two_mode_squeezer(r), Ordering::kInterleaved));
    const auto vt = covariance_interleaved(covariance_quadrature(grouped), ModeInterleaver(2));
    const Matrix block = vt.data().topRightCorner(2, 2);
    const Matrix expected = 0.5 * std::sinh(2 * r) * Eigen::Vector2d(1.0, -1.0).asDiagonal().toDenseMatrix();
    EXPECT_LE(max_abs(block - expected), 1e-14);
}

TEST(covariance_interleaved, consistent_with_converted_matrix) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 1 + seed % 4;
        const auto m = generate_random(n, 1.0, 500 + seed);
        const ModeInterleaver gamma(n);
        const auto vt = covariance_interleaved(covariance_quadrature(m), gamma);
        const auto mt = convert_ordering(m);
        EXPECT_LE(max_abs(vt.data() - 0.5 * mt.data() * mt.data().transpose()), 1e-12);
        EXPECT_EQ(covariance_grouped(vt, gamma).data(), covariance_quadrature(m).data());
    }
}

TEST(covariance_interleaved, ordering_errors) {
    const auto v = covariance_quadrature(SymplecticMatrix::identity(2));
    EXPECT_THROW(covariance_grouped(v, ModeInterleaver(2)), OrderingError);
    const auto vi = covariance_interleaved(v, ModeInterleaver(2));
    EXPECT_THROW(covariance_interleaved(vi, ModeInterleaver(2)), OrderingError);
}

TEST(wick_moment, vacuum_fourth_moment) {
    const auto v = covariance_quadrature(SymplecticMatrix::identity(1));
    EXPECT_EQ(wick_moment(v, {4, 0}), 0.75);
    EXPECT_EQ(wick_moment(v, {2, 2}), 0.25);
    EXPECT_EQ(wick_moment(v, {6, 0}), 15.0 * 0.125);
}

TEST(wick_moment, order_two_reproduces_covariance) {
    const auto v = covariance_quadrature(generate_random(3, 1.0, 77));
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            MomentIndex idx(6, 0);
            ++idx[i];
            ++idx[j];
            EXPECT_EQ(wick_moment(v, idx), v.data()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
    }
}

TEST(wick_moment, odd_orders_vanish) {
    const auto v = covariance_quadrature(generate_random(2, 1.0, 3));
    EXPECT_EQ(wick_moment(v, {3, 0, 0, 0}), 0.0);
    EXPECT_EQ(wick_moment(v, {1, 1, 1, 0}), 0.0);
    EXPECT_EQ(wick_moment(v, {1, 0, 0, 0}), 0.0);
}

TEST(wick_moment, pairing_count_for_distinct_indices) {
    // With V = all-ones-plus-diagonal every pairing contributes the same
    // product, so the sum counts (2k - 1)!! pairings.
    Matrix ones = Matrix::Ones(8, 8) + 7.0 * Matrix::Identity(8, 8);
    const CovarianceMatrix v(ones, Ordering::kGrouped, Units::kQuadrature);
    EXPECT_EQ(wick_moment(v, {1, 1, 1, 1, 1, 1, 1, 1}), 105.0);
    EXPECT_EQ(wick_moment(v, {1, 1, 1, 1, 0, 0, 0, 0}), 3.0);
}

TEST(wick_moment, errors) {
    const auto v = covariance_quadrature(SymplecticMatrix::identity(1));
    EXPECT_THROW(wick_moment(v, {10, 0}), UnsupportedOrderError);
    EXPECT_NO_THROW(wick_moment(v, {10, 0}, 10));
    EXPECT_THROW(wick_moment(v, {2}), DimensionError);
}

TEST(wick_moment, fourth_order_matches_finite_differences) {
    // <z^k>_sym = hbar^4 d^4 <W(z)> at 0 for total order 4.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = generate_random(1, 0.5, rng());
        const auto sys = random_system(1, rng, false);
        const auto v = covariance_physical(m, sys);
        const auto f = amplitude_field(m, sys);
        for (unsigned k = 0; k <= 4; ++k) {
            const std::vector<unsigned> orders{k, 4 - k};
            const double fd = mixed_derivative(f, orders, 1e-2);
            const double wick = wick_moment(v, {k, 4 - k});
            EXPECT_LT(std::abs(fd - wick), 1e-3 * std::abs(wick)) << "order (" << k << "," << 4 - k << ")";
        }
    }
}
