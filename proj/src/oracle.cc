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

#include "sympcov/oracle.h"

#include <cmath>
#include <numbers>
#include <string>

#include "oracle_internal.h"
#include "sympcov/errors.h"

namespace sympcov {

namespace {

// Input nodes where the ground state has decayed below 1e-18 of its peak are
// dropped: sum_j x_j^2 / l_j^2 > 2 ln(1e18).
constexpr double kVacuumCutoff = 82.89306334778564;

double max_asymmetry(const Matrix& m) { return max_abs(m - m.transpose()); }

}  // namespace

KernelSpec::KernelSpec(const SymplecticMatrix& m, const OscillatorSystem& sys, double cond_cap)
    : n_(m.modes()), hbar_(sys.hbar()), lengths_(sys.lengths()) {
    if (m.ordering() != Ordering::kGrouped) throw OrderingError("kernel requires grouped ordering");
    if (m.modes() != sys.modes()) throw DimensionError("matrix and oscillator system mode counts differ");
    const GroupedBlocks blk = grouped_blocks(m);
    const double cond = condition_number(blk.b);
    if (!(cond <= cond_cap)) {
        throw SingularityError("B block is singular or ill-conditioned (cond = " + std::to_string(cond) +
                               "); the kernel needs invertible B. Compose M with a small rotation "
                               "to move away from singular B");
    }
    binv_ = blk.b.inverse();
    d_binv_ = blk.d * binv_;
    binv_a_ = binv_ * blk.a;
    if (max_asymmetry(d_binv_) > 1e-10 || max_asymmetry(binv_a_) > 1e-10) {
        throw NumericError("kernel quadratic forms are not symmetric; is M symplectic?");
    }
    d_binv_ = 0.5 * (d_binv_ + d_binv_.transpose());
    binv_a_ = 0.5 * (binv_a_ + binv_a_.transpose());
    const Complex two_pi_i_hbar(0.0, 2.0 * std::numbers::pi * hbar_);
    normalization_ = 1.0 / std::sqrt(std::pow(two_pi_i_hbar, static_cast<int>(n_)) * blk.b.determinant());
}

Complex kernel_value(const KernelSpec& spec, const Vector& x, const Vector& x_prime) {
    const auto n = static_cast<Eigen::Index>(spec.modes());
    if (x.size() != n || x_prime.size() != n) throw DimensionError("kernel arguments must have n entries");
    const double phase = (x.dot(spec.output_quadratic() * x) - 2.0 * x_prime.dot(spec.cross() * x) +
                          x_prime.dot(spec.input_quadratic() * x_prime)) /
                         (2.0 * spec.hbar());
    return spec.normalization() * std::polar(1.0, phase);
}

double Grid::coordinate(std::size_t axis, std::size_t i) const {
    return center(static_cast<Eigen::Index>(axis)) - 0.5 * extent + static_cast<double>(i) * step();
}

std::size_t Grid::size() const {
    std::size_t total = 1;
    for (Eigen::Index d = 0; d < center.size(); ++d) total *= points;
    return total;
}

double Grid::weight(std::size_t i) const {
    const double h = step();
    return (i == 0 || i + 1 == points) ? 0.5 * h : h;
}

Grid centered_grid(std::size_t n, std::size_t points, double extent) {
    return Grid{points, extent, Vector::Zero(static_cast<Eigen::Index>(n))};
}

double SampledWavefunction::norm() const {
    const std::size_t n = static_cast<std::size_t>(grid.center.size());
    double total = 0.0;
    for (std::size_t node = 0; node < values.size(); ++node) {
        total += detail::node_weight(grid, n, node) * std::norm(values[node]);
    }
    return total;
}

namespace detail {

void node_coordinates(const Grid& grid, std::size_t n, std::size_t node, double* out) {
    for (std::size_t d = 0; d < n; ++d) {
        out[d] = grid.coordinate(d, node % grid.points);
        node /= grid.points;
    }
}

double node_weight(const Grid& grid, std::size_t n, std::size_t node) {
    double w = 1.0;
    for (std::size_t d = 0; d < n; ++d) {
        w *= grid.weight(node % grid.points);
        node /= grid.points;
    }
    return w;
}

void check_norm(const SampledWavefunction& psi) {
    const double norm = psi.norm();
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw ResolutionError("propagated state has norm " + std::to_string(norm) +
                              " on the grid; widen the extent or add points");
    }
}

Grid shifted_grid(const Grid& grid, const Vector& b) {
    Grid out = grid;
    out.center = grid.center + b;
    return out;
}

PropagationPlan plan_propagation(const KernelSpec& spec, const Grid& grid) {
    const std::size_t n = spec.modes();
    if (n > 2) throw DimensionError("the quadrature oracle supports n = 1 or 2 only");
    if (grid.center.size() != static_cast<Eigen::Index>(n)) throw DimensionError("grid dimension does not match n");
    const std::size_t min_points = n == 1 ? kMinPoints1D : kMinPoints2D;
    if (grid.points < min_points) {
        throw ResolutionError("grid needs at least " + std::to_string(min_points) + " points per axis");
    }
    const Vector& l = spec.lengths();
    if (!(grid.extent >= kMinExtentInLengths * l.maxCoeff())) {
        throw ResolutionError("grid extent must cover at least 8 characteristic lengths (" +
                              std::to_string(kMinExtentInLengths * l.maxCoeff()) + ")");
    }

    // Worst-case phase gradient of the integrand in x' over the support.
    const double h = grid.step();
    const double half = 0.5 * grid.extent;
    for (std::size_t d = 0; d < n; ++d) {
        double gradient = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto dd = static_cast<Eigen::Index>(d);
            const auto kk = static_cast<Eigen::Index>(k);
            const double r_in = std::min(half, std::sqrt(kVacuumCutoff) * l(kk));
            const double r_out = half + std::abs(grid.center(kk));
            gradient += std::abs(spec.input_quadratic()(dd, kk)) * r_in + std::abs(spec.cross()(dd, kk)) * r_out;
        }
        gradient /= spec.hbar();
        if (gradient > 0.0 && 2.0 * std::numbers::pi / gradient < kMinPointsPerWavelength * h) {
            throw ResolutionError("grid under-resolves the kernel phase: wavelength " +
                                  std::to_string(2.0 * std::numbers::pi / gradient) + " < 4 steps (" +
                                  std::to_string(kMinPointsPerWavelength * h) + ")");
        }
    }

    PropagationPlan plan;
    plan.n = n;
    const Grid input = centered_grid(n, grid.points, grid.extent);
    double vacuum_norm = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lk = l(static_cast<Eigen::Index>(k));
        vacuum_norm *= std::pow(std::numbers::pi * lk * lk, -0.25);
    }
    Vector xp(static_cast<Eigen::Index>(n));
    for (std::size_t node = 0; node < input.size(); ++node) {
        node_coordinates(input, n, node, xp.data());
        const double r2 = (xp.array() / l.array()).square().sum();
        if (r2 > kVacuumCutoff) continue;
        const double chirp = xp.dot(spec.input_quadratic() * xp) / (2.0 * spec.hbar());
        const double psi0 = vacuum_norm * std::exp(-0.5 * r2);
        plan.input_coords.insert(plan.input_coords.end(), xp.data(), xp.data() + n);
        plan.input_weights.push_back(node_weight(input, n, node) * psi0 * std::polar(1.0, chirp));
    }

    Vector x(static_cast<Eigen::Index>(n));
    plan.output_wavevectors.reserve(grid.size() * n);
    plan.output_prefactors.reserve(grid.size());
    for (std::size_t node = 0; node < grid.size(); ++node) {
        node_coordinates(grid, n, node, x.data());
        const Vector k = spec.cross() * x / spec.hbar();
        plan.output_wavevectors.insert(plan.output_wavevectors.end(), k.data(), k.data() + n);
        const double chirp = x.dot(spec.output_quadratic() * x) / (2.0 * spec.hbar());
        plan.output_prefactors.push_back(spec.normalization() * std::polar(1.0, chirp));
    }
    return plan;
}

}  // namespace detail

namespace {

SampledWavefunction evaluate(const KernelSpec& spec, const Grid& grid) {
    const detail::PropagationPlan plan = detail::plan_propagation(spec, grid);
    const std::size_t n = plan.n;
    const auto outputs = static_cast<std::ptrdiff_t>(plan.output_size());
    const std::size_t inputs = plan.input_size();
    SampledWavefunction psi{grid, std::vector<Complex>(plan.output_size())};

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t out = 0; out < outputs; ++out) {
        const double* k = &plan.output_wavevectors[static_cast<std::size_t>(out) * n];
        double re = 0.0;
        double im = 0.0;
        for (std::size_t in = 0; in < inputs; ++in) {
            const double* xp = &plan.input_coords[in * n];
            double phase = 0.0;
            for (std::size_t d = 0; d < n; ++d) phase += xp[d] * k[d];
            const double c = std::cos(phase);
            const double s = std::sin(phase);
            const Complex& g = plan.input_weights[in];
            // g * e^{-i phase}
            re += g.real() * c + g.imag() * s;
            im += g.imag() * c - g.real() * s;
        }
        psi.values[static_cast<std::size_t>(out)] =
            plan.output_prefactors[static_cast<std::size_t>(out)] * Complex(re, im);
    }
    return psi;
}

Complex overlap(const KernelSpec& spec, const WeylLabel& w, const SampledWavefunction& psi,
                const SampledWavefunction& shifted) {
    const std::size_t n = spec.modes();
    const auto nodes = static_cast<std::ptrdiff_t>(psi.values.size());
    std::vector<Complex> integrand(psi.values.size());

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t node = 0; node < nodes; ++node) {
        const auto i = static_cast<std::size_t>(node);
        double x[2];
        detail::node_coordinates(psi.grid, n, i, x);
        double phase = 0.0;
        for (std::size_t d = 0; d < n; ++d) phase += w.a(static_cast<Eigen::Index>(d)) * x[d];
        integrand[i] = detail::node_weight(psi.grid, n, i) * std::conj(psi.values[i]) *
                       std::polar(1.0, phase / spec.hbar()) * shifted.values[i];
    }

    Complex total(0.0, 0.0);
    for (const Complex& v : integrand) total += v;
    return std::polar(1.0, w.a.dot(w.b) / (2.0 * spec.hbar())) * total;
}

void check_label(const KernelSpec& spec, const WeylLabel& w) {
    const auto n = static_cast<Eigen::Index>(spec.modes());
    if (w.a.size() != n || w.b.size() != n) throw DimensionError("Weyl label must have n entries per half");
}

}  // namespace

SampledWavefunction propagate_vacuum(const KernelSpec& spec, const Grid& grid) {
    SampledWavefunction psi = evaluate(spec, grid);
    if (max_abs(grid.center) == 0.0) detail::check_norm(psi);
    return psi;
}

Complex numeric_amplitude(const KernelSpec& spec, const WeylLabel& w, const SampledWavefunction& psi) {
    check_label(spec, w);
    if (max_abs(psi.grid.center) != 0.0) throw InvalidArgumentError("wavefunction must be on a centered grid");
    const SampledWavefunction shifted = evaluate(spec, detail::shifted_grid(psi.grid, w.b));
    return overlap(spec, w, psi, shifted);
}

Complex numeric_amplitude(const KernelSpec& spec, const WeylLabel& w, const Grid& grid) {
    check_label(spec, w);
    const SampledWavefunction psi = propagate_vacuum(spec, centered_grid(spec.modes(), grid.points, grid.extent));
    return numeric_amplitude(spec, w, psi);
}

}  // namespace sympcov
