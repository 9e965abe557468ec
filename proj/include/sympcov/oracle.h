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

#ifndef SYMPCOV_ORACLE_H
#define SYMPCOV_ORACLE_H

#include <complex>
#include <cstddef>
#include <vector>

#include "sympcov/covariance.h"
#include "sympcov/symplectic.h"

namespace sympcov {

using Complex = std::complex<double>;

inline constexpr double kDefaultKernelConditionCap = 1e8;

/// Metaplectic kernel data for a grouped M = [[A, B], [C, D]] with invertible B:
///
///   C_M(x, x') = N exp{(i / 2 hbar) [x^T D B^{-1} x - 2 x'^T B^{-1} x + x'^T B^{-1} A x']}
///
/// with N = 1 / sqrt((2 pi i hbar)^n det B) on the principal branch.
class KernelSpec {
   public:
    /// Throws SingularityError when cond(B) exceeds `cond_cap`, and
    /// NumericError when D B^{-1} or B^{-1} A is not symmetric to 1e-10.
    KernelSpec(const SymplecticMatrix& m, const OscillatorSystem& sys,
               double cond_cap = kDefaultKernelConditionCap);

    std::size_t modes() const { return n_; }
    double hbar() const { return hbar_; }
    const Vector& lengths() const { return lengths_; }
    const Matrix& output_quadratic() const { return d_binv_; }  // D B^{-1}
    const Matrix& cross() const { return binv_; }                // B^{-1}
    const Matrix& input_quadratic() const { return binv_a_; }   // B^{-1} A
    Complex normalization() const { return normalization_; }

   private:
    std::size_t n_;
    double hbar_;
    Vector lengths_;
    Matrix d_binv_;
    Matrix binv_;
    Matrix binv_a_;
    Complex normalization_;
};

Complex kernel_value(const KernelSpec& spec, const Vector& x, const Vector& x_prime);

/// Uniform tensor grid with `points` nodes per axis spanning
/// [center_d - extent / 2, center_d + extent / 2] on every axis d.
struct Grid {
    std::size_t points = 2048;
    double extent = 16.0;
    Vector center;

    double step() const { return extent / static_cast<double>(points - 1); }
    double coordinate(std::size_t axis, std::size_t i) const;
    /// Total node count, points^n.
    std::size_t size() const;
    /// Trapezoid weight of one axis node.
    double weight(std::size_t i) const;
};

/// Grid centered at the origin in n dimensions.
Grid centered_grid(std::size_t n, std::size_t points, double extent);

struct SampledWavefunction {
    Grid grid;
    /// Flattened with axis 0 fastest.
    std::vector<Complex> values;

    /// Trapezoid estimate of the integral of |psi|^2.
    double norm() const;
};

inline constexpr double kNormTolerance = 1e-6;
inline constexpr std::size_t kMinPoints1D = 512;
inline constexpr std::size_t kMinPoints2D = 32;
inline constexpr double kMinExtentInLengths = 8.0;
inline constexpr double kMinPointsPerWavelength = 4.0;

/// Psi_M = C_M applied to the oscillator ground state, by trapezoid
/// quadrature over a centered copy of `grid` and evaluated on `grid` itself.
///
/// Throws ResolutionError if the grid is narrower than 8 characteristic
/// lengths, has too few points, under-resolves the kernel phase, or (for a
/// centered output grid) loses more than kNormTolerance of the norm.
/// Parallel over output nodes; every node is an ordered serial sum, so the
/// result is bitwise independent of the thread count.
SampledWavefunction propagate_vacuum(const KernelSpec& spec, const Grid& grid);

/// <Psi_M| W(a, b) |Psi_M> by quadrature, where
/// W(a, b) psi(x) = exp(i a.b / 2 hbar) exp(i a.x / hbar) psi(x + b).
/// psi(x + b) is obtained by re-evaluating the kernel integral on the grid
/// shifted by b, so no interpolation is involved.
Complex numeric_amplitude(const KernelSpec& spec, const WeylLabel& w, const Grid& grid);

/// As above, reusing an already propagated (centered) wavefunction.
Complex numeric_amplitude(const KernelSpec& spec, const WeylLabel& w, const SampledWavefunction& psi);

/// Single-threaded reference versions of the kernels above, kept for
/// testing and benchmarking. Results are bitwise identical to the parallel ones.
namespace serial {

SampledWavefunction propagate_vacuum(const KernelSpec& spec, const Grid& grid);
Complex numeric_amplitude(const KernelSpec& spec, const WeylLabel& w, const Grid& grid);

}  // namespace serial

}  // namespace sympcov

#endif  // SYMPCOV_ORACLE_H
