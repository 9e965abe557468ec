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

#ifndef SYMPCOV_ANALYSIS_H
#define SYMPCOV_ANALYSIS_H

#include <cstddef>
#include <vector>

#include "sympcov/covariance.h"
#include "sympcov/symplectic.h"

namespace sympcov {

/// Symplectic eigenvalues kappa_j, ascending.
struct WilliamsonSpectrum {
    std::vector<double> kappas;
};

inline constexpr double kPairingTolerance = 1e-9;

/// Moduli of the eigenvalues of W V, where W is the canonical form of the
/// covariance's ordering. Eigenvalues come in +-i kappa pairs; a pair whose
/// moduli disagree by more than kPairingTolerance (relative) raises NumericError.
WilliamsonSpectrum symplectic_eigenvalues(const CovarianceMatrix& v);

inline constexpr double kVacuumVariance = 0.5;

struct SqueezeReport {
    /// Euclidean norms of the rows of M.
    std::vector<double> row_norms;
    /// Diagonal of V_q = M M^T / 2, i.e. row_norms[j]^2 / 2.
    std::vector<double> diag_variances;
    std::vector<std::size_t> squeezed_indices;
    double vacuum_level = kVacuumVariance;
    double tol = 0.0;

    bool squeezed() const { return !squeezed_indices.empty(); }
};

/// Flags every grouped coordinate whose variance falls below the vacuum
/// level by more than `tol`.
SqueezeReport squeeze_report(const SymplecticMatrix& m, double tol = kDefaultTolerance);

struct ModeCoupling {
    std::size_t i = 0;
    std::size_t k = 0;
    /// Max-norm of the (i, k) off-diagonal 2x2 block of the interleaved V_q.
    double norm = 0.0;
};

/// Block-vanishing separability test on the interleaved quadrature
/// covariance: the state is reported separable iff every off-diagonal
/// mode-coupling block is below `tol`.
struct SeparabilityReport {
    std::vector<ModeCoupling> couplings;
    bool separable = true;
    double tol = 0.0;
};

inline constexpr double kDefaultSeparabilityTolerance = 1e-10;

SeparabilityReport separability_report(const SymplecticMatrix& m,
                                       double tol = kDefaultSeparabilityTolerance);

struct Evolution {
    SymplecticMatrix state;
    CovarianceMatrix covariance;
};

/// |Psi_M> -> C_H |Psi_M> = |Psi_{HM}>; returns H M and its quadrature covariance.
Evolution evolve(const SymplecticMatrix& m, const SymplecticMatrix& h);

/// Exact phase-space flow of uncoupled oscillators in dimensionless
/// quadratures: mode j is rotated by w_j t. Grouped ordering.
SymplecticMatrix harmonic_flow(const OscillatorSystem& sys, double t);

}  // namespace sympcov

#endif  // SYMPCOV_ANALYSIS_H
