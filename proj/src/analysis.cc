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

#include "sympcov/analysis.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sympcov/errors.h"

namespace sympcov {

WilliamsonSpectrum symplectic_eigenvalues(const CovarianceMatrix& v) {
    const std::size_t n = v.modes();
    const Matrix wv = canonical_form(n, v.ordering()) * v.data();
    Eigen::EigenSolver<Matrix> solver(wv, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericError("eigenvalue solver failed");

    std::vector<double> moduli;
    moduli.reserve(2 * n);
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        moduli.push_back(std::abs(solver.eigenvalues()(k)));
    }
    std::sort(moduli.begin(), moduli.end());

    WilliamsonSpectrum spectrum;
    spectrum.kappas.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lo = moduli[2 * j];
        const double hi = moduli[2 * j + 1];
        if (!(lo > 0.0)) throw DegeneracyError("covariance has a vanishing symplectic eigenvalue");
        if (hi - lo > kPairingTolerance * hi) {
            throw NumericError("unpaired symplectic eigenvalues " + std::to_string(lo) + " and " +
                               std::to_string(hi));
        }
        spectrum.kappas.push_back(0.5 * (lo + hi));
    }
    return spectrum;
}

SqueezeReport squeeze_report(const SymplecticMatrix& m, double tol) {
    if (m.ordering() != Ordering::kGrouped) {
        throw OrderingError("squeeze_report requires grouped ordering");
    }
    const CovarianceMatrix vq = covariance_quadrature(m);
    SqueezeReport report;
    report.tol = tol;
    const Eigen::Index dim = m.data().rows();
    for (Eigen::Index j = 0; j < dim; ++j) {
        report.row_norms.push_back(m.data().row(j).norm());
        const double variance = vq.data()(j, j);
        report.diag_variances.push_back(variance);
        if (variance < report.vacuum_level - tol) {
            report.squeezed_indices.push_back(static_cast<std::size_t>(j));
        }
    }
    return report;
}

SeparabilityReport separability_report(const SymplecticMatrix& m, double tol) {
    SeparabilityReport report;
    report.tol = tol;
    const std::size_t n = m.modes();
    if (n == 1) return report;

    // sum_j A_ij A_kj^T is the (i, k) block of M~ M~^T; V~_q carries half of it.
    const SymplecticMatrix interleaved = to_ordering(m, Ordering::kInterleaved);
    const Matrix vq = 0.5 * interleaved.data() * interleaved.data().transpose();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double norm = vq.block<2, 2>(2 * i, 2 * k).cwiseAbs().maxCoeff();
            report.couplings.push_back({i, k, norm});
            if (!(norm <= tol)) report.separable = false;
        }
    }
    return report;
}

Evolution evolve(const SymplecticMatrix& m, const SymplecticMatrix& h) {
    SymplecticMatrix moved = h * m;
    CovarianceMatrix covariance = covariance_quadrature(moved);
    return Evolution{std::move(moved), std::move(covariance)};
}

SymplecticMatrix harmonic_flow(const OscillatorSystem& sys, double t) {
    if (!std::isfinite(t)) throw InvalidArgumentError("time must be finite");
    const auto n = static_cast<Eigen::Index>(sys.modes());
    Vector c(n);
    Vector s(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double phase = sys.frequencies()[static_cast<std::size_t>(j)] * t;
        c(j) = std::cos(phase);
        s(j) = std::sin(phase);
    }
    GroupedBlocks blocks{c.asDiagonal(), s.asDiagonal(), (-s).asDiagonal(), c.asDiagonal()};
    return SymplecticMatrix::create(assemble(blocks), Ordering::kGrouped);
}

}  // namespace sympcov
