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

#ifndef SYMPCOV_COVARIANCE_H
#define SYMPCOV_COVARIANCE_H

#include <cstddef>
#include <string_view>
#include <vector>

#include "sympcov/symplectic.h"

namespace sympcov {

/// n uncoupled harmonic oscillators. Characteristic lengths are derived on
/// demand as l_j = sqrt(hbar / (m_j w_j)).
class OscillatorSystem {
   public:
    /// Throws InvalidArgumentError unless hbar, masses and frequencies are all
    /// strictly positive and finite, and DimensionError if the lists differ in size.
    OscillatorSystem(double hbar, std::vector<double> masses, std::vector<double> frequencies);

    /// hbar = m_j = w_j = 1, so every l_j = 1.
    static OscillatorSystem unit(std::size_t n);

    /// Unit masses with frequencies chosen so that l_j matches `lengths`.
    static OscillatorSystem with_lengths(double hbar, const std::vector<double>& lengths);

    std::size_t modes() const { return masses_.size(); }
    double hbar() const { return hbar_; }
    const std::vector<double>& masses() const { return masses_; }
    const std::vector<double>& frequencies() const { return frequencies_; }
    Vector lengths() const;

   private:
    double hbar_;
    std::vector<double> masses_;
    std::vector<double> frequencies_;
};

enum class Units { kPhysical, kQuadrature };

std::string_view to_string(Units units);
Units parse_units(std::string_view name);

/// Relative eigenvalue floor below which a covariance is rejected as degenerate.
inline constexpr double kPositivityFloor = 1e-12;

/// Symmetric positive-definite second-moment matrix. The input is
/// symmetrized on construction; throws DegeneracyError if the smallest
/// eigenvalue is not above kPositivityFloor times the largest.
class CovarianceMatrix {
   public:
    CovarianceMatrix(Matrix data, Ordering ordering, Units units);

    std::size_t modes() const { return static_cast<std::size_t>(data_.rows() / 2); }
    const Matrix& data() const { return data_; }
    Ordering ordering() const { return ordering_; }
    Units units() const { return units_; }

   private:
    Matrix data_;
    Ordering ordering_;
    Units units_;
};

/// Label (a, b) of the Weyl generator W(a, b) = exp(i (a.x + b.p) / hbar).
struct WeylLabel {
    Vector a;
    Vector b;

    /// The stacked vector (a, b), matching the grouped layout.
    Vector stacked() const;
};

/// Lambda = M blockdiag(L^2 / hbar^2, L^{-2}) M^T with L = diag(l_j).
Matrix lambda_matrix(const SymplecticMatrix& m, const OscillatorSystem& sys);

/// <Psi_M| W(a, b) |Psi_M> = exp(-(a, b) Lambda (a, b)^T / 4) for Psi_M = C_M |0>.
double amplitude(const SymplecticMatrix& m, const OscillatorSystem& sys, const WeylLabel& w);

/// Symmetrized position/momentum covariance (hbar^2 / 2) Lambda.
///
/// The off-diagonal x-p entries are the Weyl-symmetrized moments
/// <(x_j p_k + p_k x_j) / 2>; the commutator part i hbar / 2 is not included.
/// First moments vanish because the seed state is the vacuum.
CovarianceMatrix covariance_physical(const SymplecticMatrix& m, const OscillatorSystem& sys);

/// Dimensionless quadrature covariance M M^T / 2, in the ordering of `m`.
CovarianceMatrix covariance_quadrature(const SymplecticMatrix& m);

/// Checks that Lambda_q = M M^T is itself symplectic.
ValidationResult quadrature_lambda_check(const SymplecticMatrix& m, double tol = kDefaultTolerance);

/// Gamma^{-1} V Gamma; requires a grouped covariance.
CovarianceMatrix covariance_interleaved(const CovarianceMatrix& v, const ModeInterleaver& gamma);

/// Gamma V Gamma^{-1}; requires an interleaved covariance.
CovarianceMatrix covariance_grouped(const CovarianceMatrix& v, const ModeInterleaver& gamma);

/// Derivative multi-order over the 2n phase-space coordinates of a covariance.
using MomentIndex = std::vector<unsigned>;

inline constexpr unsigned kDefaultMomentCap = 8;

/// Weyl-ordered moment of the zero-mean Gaussian with covariance `v`: the sum
/// over all perfect pairings of the coordinate multiset (coordinate i taken
/// idx[i] times) of products of covariance entries. Odd total order gives 0. Throws UnsupportedOrderError above `cap`.
double wick_moment(const CovarianceMatrix& v, const MomentIndex& idx,
                   unsigned cap = kDefaultMomentCap);

}  // namespace sympcov

#endif  // SYMPCOV_COVARIANCE_H
