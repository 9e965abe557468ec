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

#ifndef SYMPCOV_SYMPLECTIC_H
#define SYMPCOV_SYMPLECTIC_H

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sympcov {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Phase-space coordinate layout.
///
/// kGrouped is (q_1, ..., q_n, p_1, ..., p_n) with canonical form
/// [[0, I], [-I, 0]]. kInterleaved is (q_1, p_1, ..., q_n, p_n) with
/// canonical form blockdiag(J, ..., J), J = [[0, 1], [-1, 0]].
enum class Ordering { kGrouped, kInterleaved };

std::string_view to_string(Ordering ordering);

/// Accepts "grouped" or "interleaved"; throws InvalidArgumentError otherwise.
Ordering parse_ordering(std::string_view name);

inline constexpr double kDefaultTolerance = 1e-10;

/// The antisymmetric form preserved by Sp(2n, R) in the given ordering.
Matrix canonical_form(std::size_t n, Ordering ordering);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Matrix& m);

/// Two-norm condition number via SVD; +inf for singular input.
double condition_number(const Matrix& m);

struct ValidationResult {
    double residual = 0.0;
    bool is_symplectic = false;
};

/// residual = max |M W M^T - W| with W the ordering's canonical form.
/// Throws DimensionError for non-square or odd-sized input, and
/// InvalidArgumentError for a negative tolerance.
ValidationResult validate_symplectic(const Matrix& data, Ordering ordering,
                                     double tol = kDefaultTolerance);

/// A 2n x 2n real matrix that satisfied the group condition for its ordering
/// when it was built. Immutable.
class SymplecticMatrix {
   public:
    /// Validates `data` and throws NotSymplecticError when the residual or
    /// the determinant check exceeds `tol`.
    static SymplecticMatrix create(Matrix data, Ordering ordering,
                                   double tol = kDefaultTolerance);

    static SymplecticMatrix identity(std::size_t n, Ordering ordering = Ordering::kGrouped);

    std::size_t modes() const { return static_cast<std::size_t>(data_.rows() / 2); }
    const Matrix& data() const { return data_; }
    Ordering ordering() const { return ordering_; }
    double tolerance() const { return tolerance_; }
    /// Group-condition residual measured at construction.
    double residual() const { return residual_; }

    Matrix inverse() const;

   private:
    SymplecticMatrix(Matrix data, Ordering ordering, double tol, double residual)
        : data_(std::move(data)), ordering_(ordering), tolerance_(tol), residual_(residual) {}

    Matrix data_;
    Ordering ordering_;
    double tolerance_;
    double residual_;
};

/// Group product lhs * rhs, validated at `tol`. Both factors must share an ordering.
SymplecticMatrix compose(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs, double tol);

/// compose() at the larger of the two factor tolerances.
SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs);

/// n x n blocks of a grouped matrix [[A, B], [C, D]].
struct GroupedBlocks {
    Matrix a, b, c, d;
};

GroupedBlocks split_blocks(const Matrix& grouped);
GroupedBlocks grouped_blocks(const SymplecticMatrix& m);
Matrix assemble(const GroupedBlocks& blocks);

/// 2x2 blocks A_ij of an interleaved matrix, stored row-major by (i, j).
class InterleavedBlocks {
   public:
    explicit InterleavedBlocks(const Matrix& interleaved);

    std::size_t modes() const { return n_; }
    const Eigen::Matrix2d& operator()(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }

    Matrix assemble() const;

   private:
    std::size_t n_;
    std::vector<Eigen::Matrix2d> blocks_;
};

InterleavedBlocks interleaved_blocks(const SymplecticMatrix& m);

/// Residuals of A D^T - B C^T = I, A B^T = B A^T and C D^T = D C^T.
struct GroupedBlockResiduals {
    double identity = 0.0;
    double ab_symmetric = 0.0;
    double cd_symmetric = 0.0;
};

GroupedBlockResiduals grouped_block_residuals(const Matrix& grouped);
GroupedBlockResiduals block_conditions_grouped(const SymplecticMatrix& m);

struct CrossResidual {
    std::size_t i = 0;
    std::size_t k = 0;
    double residual = 0.0;
};

/// diagonal[i] = |sum_j A_ij J A_ij^T - J|_max.
/// cross holds |sum_j A_ij J A_kj^T|_max for every i < k, lexicographic.
struct InterleavedBlockResiduals {
    std::vector<double> diagonal;
    std::vector<CrossResidual> cross;
};

InterleavedBlockResiduals interleaved_block_residuals(const Matrix& interleaved);
InterleavedBlockResiduals block_conditions_interleaved(const SymplecticMatrix& m);

/// The orthogonal permutation Gamma with (q, p)^T = Gamma R^T, where
/// R = (q_1, p_1, ..., q_n, p_n). Interleaved index 2k maps to grouped index
/// k and 2k + 1 maps to n + k.
class ModeInterleaver {
   public:
    explicit ModeInterleaver(std::size_t n);

    std::size_t modes() const { return n_; }
    /// perm[interleaved index] = grouped index.
    std::span<const std::size_t> permutation() const { return perm_; }

    Matrix matrix() const;

    /// Gamma^{-1} X Gamma. Entry (i, j) of the result is X(perm[i], perm[j]).
    Matrix to_interleaved(const Matrix& grouped) const;
    /// Gamma X Gamma^{-1}; exact inverse of to_interleaved.
    Matrix to_grouped(const Matrix& interleaved) const;

    /// Gamma r: reorders an interleaved coordinate vector into grouped layout.
    Vector interleaved_to_grouped(const Vector& r) const;

   private:
    std::size_t n_;
    std::vector<std::size_t> perm_;
};

/// Switches the matrix to the other ordering by pure permutation.
SymplecticMatrix convert_ordering(const SymplecticMatrix& m);

/// convert_ordering() when the orderings differ, otherwise a copy.
SymplecticMatrix to_ordering(const SymplecticMatrix& m, Ordering ordering);

/// exp(W S) for a seeded random symmetric S with entries uniform in
/// [-scale, scale]. Only reaches the identity component of the group.
SymplecticMatrix generate_random(std::size_t n, double scale, std::uint64_t seed,
                                 double tol = kDefaultTolerance);

/// exp(W S) for a caller-supplied symmetric S.
SymplecticMatrix exp_hamiltonian(const Matrix& symmetric, double tol = kDefaultTolerance);

inline constexpr double kDefaultConditionCap = 1e12;

/// [[0, B], [-B^{-T}, 0]], an element outside the identity component's
/// exponential image. Throws SingularityError when cond(B) exceeds the cap.
SymplecticMatrix make_nonconnected(const Matrix& b, double cond_cap = kDefaultConditionCap,
                                   double tol = kDefaultTolerance);

}  // namespace sympcov

#endif  // SYMPCOV_SYMPLECTIC_H
