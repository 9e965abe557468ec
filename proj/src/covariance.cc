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
#include <numeric>
#include <string>

#include "sympcov/errors.h"

namespace sympcov {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidArgumentError(std::string(what) + " must be positive and finite");
    }
}

void require_matching(const SymplecticMatrix& m, const OscillatorSystem& sys) {
    if (m.modes() != sys.modes()) {
        throw DimensionError("matrix has " + std::to_string(m.modes()) + " modes, system has " +
                             std::to_string(sys.modes()));
    }
    if (m.ordering() != Ordering::kGrouped) {
        throw OrderingError("physical covariance requires grouped ordering");
    }
}

// Sum over perfect pairings of `coords`: pair the first entry with each of
// the others and recurse on what is left.
double pairing_sum(const Matrix& v, const std::vector<Eigen::Index>& coords) {
    if (coords.empty()) return 1.0;
    double total = 0.0;
    std::vector<Eigen::Index> rest;
    rest.reserve(coords.size() - 2);
    for (std::size_t k = 1; k < coords.size(); ++k) {
        rest.clear();
        for (std::size_t r = 1; r < coords.size(); ++r) {
            if (r != k) rest.push_back(coords[r]);
        }
        total += v(coords[0], coords[k]) * pairing_sum(v, rest);
    }
    return total;
}

}  // namespace

OscillatorSystem::OscillatorSystem(double hbar, std::vector<double> masses,
                                   std::vector<double> frequencies)
    : hbar_(hbar), masses_(std::move(masses)), frequencies_(std::move(frequencies)) {
    require_positive(hbar_, "hbar");
    if (masses_.empty()) throw DimensionError("oscillator system needs at least one mode");
    if (masses_.size() != frequencies_.size()) {
        throw DimensionError("masses and frequencies must have the same length");
    }
    for (double m : masses_) require_positive(m, "mass");
    for (double w : frequencies_) require_positive(w, "frequency");
}

OscillatorSystem OscillatorSystem::unit(std::size_t n) {
    return OscillatorSystem(1.0, std::vector<double>(n, 1.0), std::vector<double>(n, 1.0));
}

OscillatorSystem OscillatorSystem::with_lengths(double hbar, const std::vector<double>& lengths) {
    std::vector<double> frequencies;
    frequencies.reserve(lengths.size());
    for (double l : lengths) {
        require_positive(l, "length");
        frequencies.push_back(hbar / (l * l));
    }
    return OscillatorSystem(hbar, std::vector<double>(lengths.size(), 1.0), std::move(frequencies));
}

Vector OscillatorSystem::lengths() const {
    Vector l(static_cast<Eigen::Index>(modes()));
    for (std::size_t j = 0; j < modes(); ++j) {
        l(static_cast<Eigen::Index>(j)) = std::sqrt(hbar_ / (masses_[j] * frequencies_[j]));
    }
    return l;
}

std::string_view to_string(Units units) {
    return units == Units::kPhysical ? "physical" : "quadrature";
}

Units parse_units(std::string_view name) {
    if (name == "physical") return Units::kPhysical;
    if (name == "quadrature") return Units::kQuadrature;
    throw InvalidArgumentError("unknown units '" + std::string(name) +
                               "', expected 'physical' or 'quadrature'");
}

CovarianceMatrix::CovarianceMatrix(Matrix data, Ordering ordering, Units units)
    : ordering_(ordering), units_(units) {
    if (data.rows() != data.cols() || data.rows() == 0 || data.rows() % 2 != 0) {
        throw DimensionError("covariance must be square with even positive dimension");
    }
    if (!data.allFinite()) throw DegeneracyError("covariance has non-finite entries");
    data_ = 0.5 * (data + data.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(data_, Eigen::EigenvaluesOnly);
    const Vector& ev = eig.eigenvalues();
    const double largest = ev(ev.size() - 1);
    if (!(largest > 0.0) || !(ev(0) > kPositivityFloor * largest)) {
        throw DegeneracyError("covariance is not positive definite (eigenvalues in [" +
                              std::to_string(ev(0)) + ", " + std::to_string(largest) + "])");
    }
}

Vector WeylLabel::stacked() const {
    if (a.size() != b.size()) throw DimensionError("Weyl label halves differ in length");
    Vector z(a.size() + b.size());
    z << a, b;
    return z;
}

Matrix lambda_matrix(const SymplecticMatrix& m, const OscillatorSystem& sys) {
    require_matching(m, sys);
    const auto n = static_cast<Eigen::Index>(sys.modes());
    const Vector l = sys.lengths();
    const double hbar = sys.hbar();
    Vector seed(2 * n);
    seed.head(n) = l.array().square() / (hbar * hbar);
    seed.tail(n) = l.array().square().inverse();
    const Matrix lambda = m.data() * seed.asDiagonal() * m.data().transpose();
    return 0.5 * (lambda + lambda.transpose());
}

double amplitude(const SymplecticMatrix& m, const OscillatorSystem& sys, const WeylLabel& w) {
    const Matrix lambda = lambda_matrix(m, sys);
    const Vector z = w.stacked();
    if (z.size() != lambda.rows()) {
        throw DimensionError("Weyl label has " + std::to_string(z.size()) + " entries, expected " +
                             std::to_string(lambda.rows()));
    }
    return std::exp(-0.25 * z.dot(lambda * z));
}

CovarianceMatrix covariance_physical(const SymplecticMatrix& m, const OscillatorSystem& sys) {
    const double hbar = sys.hbar();
    return CovarianceMatrix(0.5 * hbar * hbar * lambda_matrix(m, sys), Ordering::kGrouped,
                            Units::kPhysical);
}

CovarianceMatrix covariance_quadrature(const SymplecticMatrix& m) {
    return CovarianceMatrix(0.5 * m.data() * m.data().transpose(), m.ordering(), Units::kQuadrature);
}

ValidationResult quadrature_lambda_check(const SymplecticMatrix& m, double tol) {
    return validate_symplectic(m.data() * m.data().transpose(), m.ordering(), tol);
}

CovarianceMatrix covariance_interleaved(const CovarianceMatrix& v, const ModeInterleaver& gamma) {
    if (v.ordering() != Ordering::kGrouped) {
        throw OrderingError("covariance_interleaved requires a grouped covariance");
    }
    return CovarianceMatrix(gamma.to_interleaved(v.data()), Ordering::kInterleaved, v.units());
}

CovarianceMatrix covariance_grouped(const CovarianceMatrix& v, const ModeInterleaver& gamma) {
    if (v.ordering() != Ordering::kInterleaved) {
        throw OrderingError("covariance_grouped requires an interleaved covariance");
    }
    return CovarianceMatrix(gamma.to_grouped(v.data()), Ordering::kGrouped, v.units());
}

double wick_moment(const CovarianceMatrix& v, const MomentIndex& idx, unsigned cap) {
    if (idx.size() != static_cast<std::size_t>(v.data().rows())) {
        throw DimensionError("moment index has " + std::to_string(idx.size()) +
                             " entries, expected " + std::to_string(v.data().rows()));
    }
    const unsigned order = std::accumulate(idx.begin(), idx.end(), 0u);
    if (order > cap) {
        throw UnsupportedOrderError("moment order " + std::to_string(order) + " exceeds cap " +
                                    std::to_string(cap));
    }
    if (order % 2 != 0) return 0.0;
    std::vector<Eigen::Index> coords;
    coords.reserve(order);
    for (std::size_t c = 0; c < idx.size(); ++c) {
        coords.insert(coords.end(), idx[c], static_cast<Eigen::Index>(c));
    }
    return pairing_sum(v.data(), coords);
}

}  // namespace sympcov
