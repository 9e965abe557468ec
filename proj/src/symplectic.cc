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

#include "sympcov/symplectic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "sympcov/errors.h"

namespace sympcov {

namespace {

std::size_t checked_modes(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("matrix must be square, got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    if (m.rows() == 0 || m.rows() % 2 != 0) {
        throw DimensionError("matrix dimension must be even and at least 2, got " +
                             std::to_string(m.rows()));
    }
    return static_cast<std::size_t>(m.rows() / 2);
}

void require_ordering(const SymplecticMatrix& m, Ordering expected, const char* what) {
    if (m.ordering() != expected) {
        throw OrderingError(std::string(what) + " requires " + std::string(to_string(expected)) +
                            " ordering");
    }
}

const Eigen::Matrix2d& unit_form() {
    static const Eigen::Matrix2d j = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
    return j;
}

}  // namespace

std::string_view to_string(Ordering ordering) {
    return ordering == Ordering::kGrouped ? "grouped" : "interleaved";
}

Ordering parse_ordering(std::string_view name) {
    if (name == "grouped") return Ordering::kGrouped;
    if (name == "interleaved") return Ordering::kInterleaved;
    throw InvalidArgumentError("unknown ordering '" + std::string(name) +
                               "', expected 'grouped' or 'interleaved'");
}

Matrix canonical_form(std::size_t n, Ordering ordering) {
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Matrix w = Matrix::Zero(dim, dim);
    const auto nn = static_cast<Eigen::Index>(n);
    if (ordering == Ordering::kGrouped) {
        w.topRightCorner(nn, nn).setIdentity();
        w.bottomLeftCorner(nn, nn) = -Matrix::Identity(nn, nn);
    } else {
        for (Eigen::Index k = 0; k < nn; ++k) {
            w.block<2, 2>(2 * k, 2 * k) = unit_form();
        }
    }
    return w;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double condition_number(const Matrix& m) {
    if (m.size() == 0) return 1.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

ValidationResult validate_symplectic(const Matrix& data, Ordering ordering, double tol) {
    if (!(tol >= 0.0)) throw InvalidArgumentError("tolerance must be nonnegative");
    const std::size_t n = checked_modes(data);
    const Matrix w = canonical_form(n, ordering);
    ValidationResult result;
    result.residual = max_abs(data * w * data.transpose() - w);
    // NaN residuals compare false and are therefore rejected.
    result.is_symplectic = result.residual <= tol;
    return result;
}

SymplecticMatrix SymplecticMatrix::create(Matrix data, Ordering ordering, double tol) {
    const ValidationResult check = validate_symplectic(data, ordering, tol);
    if (!check.is_symplectic) {
        throw NotSymplecticError("group condition residual " + std::to_string(check.residual) +
                                 " exceeds tolerance " + std::to_string(tol));
    }
    // det = +1 follows from the group condition; LU round-off scales with
    // cond(M) = |M|_2^2 for symplectic M.
    const double det = data.determinant();
    const double det_tol = tol * std::max(1.0, data.squaredNorm());
    if (!(std::abs(det - 1.0) <= det_tol)) {
        throw NotSymplecticError("determinant " + std::to_string(det) + " is not +1");
    }
    return SymplecticMatrix(std::move(data), ordering, tol, check.residual);
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t n, Ordering ordering) {
    if (n == 0) throw DimensionError("mode count must be positive");
    const auto dim = static_cast<Eigen::Index>(2 * n);
    return SymplecticMatrix(Matrix::Identity(dim, dim), ordering, kDefaultTolerance, 0.0);
}

Matrix SymplecticMatrix::inverse() const {
    // M^{-1} = -W M^T W for symplectic M.
    const Matrix w = canonical_form(modes(), ordering_);
    return -w * data_.transpose() * w;
}

SymplecticMatrix compose(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs, double tol) {
    if (lhs.ordering() != rhs.ordering()) {
        throw OrderingError("cannot multiply matrices with different orderings");
    }
    if (lhs.modes() != rhs.modes()) {
        throw DimensionError("mode count mismatch: " + std::to_string(lhs.modes()) + " vs " +
                             std::to_string(rhs.modes()));
    }
    return SymplecticMatrix::create(lhs.data() * rhs.data(), lhs.ordering(), tol);
}

SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) {
    return compose(lhs, rhs, std::max(lhs.tolerance(), rhs.tolerance()));
}

GroupedBlocks split_blocks(const Matrix& grouped) {
    const auto n = static_cast<Eigen::Index>(checked_modes(grouped));
    return GroupedBlocks{grouped.topLeftCorner(n, n), grouped.topRightCorner(n, n),
                         grouped.bottomLeftCorner(n, n), grouped.bottomRightCorner(n, n)};
}

GroupedBlocks grouped_blocks(const SymplecticMatrix& m) {
    require_ordering(m, Ordering::kGrouped, "grouped_blocks");
    return split_blocks(m.data());
}

Matrix assemble(const GroupedBlocks& blocks) {
    const Eigen::Index n = blocks.a.rows();
    Matrix out(2 * n, 2 * n);
    out << blocks.a, blocks.b, blocks.c, blocks.d;
    return out;
}

InterleavedBlocks::InterleavedBlocks(const Matrix& interleaved) : n_(checked_modes(interleaved)) {
    blocks_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            blocks_.emplace_back(interleaved.block<2, 2>(2 * i, 2 * j));
        }
    }
}

Matrix InterleavedBlocks::assemble() const {
    const auto dim = static_cast<Eigen::Index>(2 * n_);
    Matrix out(dim, dim);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = (*this)(i, j);
        }
    }
    return out;
}

InterleavedBlocks interleaved_blocks(const SymplecticMatrix& m) {
    require_ordering(m, Ordering::kInterleaved, "interleaved_blocks");
    return InterleavedBlocks(m.data());
}

GroupedBlockResiduals grouped_block_residuals(const Matrix& grouped) {
    const GroupedBlocks blk = split_blocks(grouped);
    const auto n = blk.a.rows();
    GroupedBlockResiduals r;
    r.identity = max_abs(blk.a * blk.d.transpose() - blk.b * blk.c.transpose() - Matrix::Identity(n, n));
    r.ab_symmetric = max_abs(blk.a * blk.b.transpose() - blk.b * blk.a.transpose());
    r.cd_symmetric = max_abs(blk.c * blk.d.transpose() - blk.d * blk.c.transpose());
    return r;
}

GroupedBlockResiduals block_conditions_grouped(const SymplecticMatrix& m) {
    require_ordering(m, Ordering::kGrouped, "block_conditions_grouped");
    return grouped_block_residuals(m.data());
}

InterleavedBlockResiduals interleaved_block_residuals(const Matrix& interleaved) {
    const InterleavedBlocks blk(interleaved);
    const std::size_t n = blk.modes();
    const Eigen::Matrix2d& j = unit_form();
    auto row_form = [&](std::size_t i, std::size_t k) {
        Eigen::Matrix2d acc = Eigen::Matrix2d::Zero();
        for (std::size_t c = 0; c < n; ++c) acc += blk(i, c) * j * blk(k, c).transpose();
        return acc;
    };
    InterleavedBlockResiduals r;
    r.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.diagonal.push_back((row_form(i, i) - j).cwiseAbs().maxCoeff());
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            r.cross.push_back({i, k, row_form(i, k).cwiseAbs().maxCoeff()});
        }
    }
    return r;
}

InterleavedBlockResiduals block_conditions_interleaved(const SymplecticMatrix& m) {
    require_ordering(m, Ordering::kInterleaved, "block_conditions_interleaved");
    return interleaved_block_residuals(m.data());
}

ModeInterleaver::ModeInterleaver(std::size_t n) : n_(n), perm_(2 * n) {
    if (n == 0) throw DimensionError("mode count must be positive");
    for (std::size_t k = 0; k < n; ++k) {
        perm_[2 * k] = k;
        perm_[2 * k + 1] = n + k;
    }
}

Matrix ModeInterleaver::matrix() const {
    const auto dim = static_cast<Eigen::Index>(2 * n_);
    Matrix gamma = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < perm_.size(); ++j) {
        gamma(static_cast<Eigen::Index>(perm_[j]), static_cast<Eigen::Index>(j)) = 1.0;
    }
    return gamma;
}

Matrix ModeInterleaver::to_interleaved(const Matrix& grouped) const {
    const auto dim = static_cast<Eigen::Index>(2 * n_);
    if (grouped.rows() != dim || grouped.cols() != dim) {
        throw DimensionError("matrix does not match interleaver mode count " + std::to_string(n_));
    }
    Matrix out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            out(i, j) = grouped(static_cast<Eigen::Index>(perm_[i]), static_cast<Eigen::Index>(perm_[j]));
        }
    }
    return out;
}

Matrix ModeInterleaver::to_grouped(const Matrix& interleaved) const {
    const auto dim = static_cast<Eigen::Index>(2 * n_);
    if (interleaved.rows() != dim || interleaved.cols() != dim) {
        throw DimensionError("matrix does not match interleaver mode count " + std::to_string(n_));
    }
    Matrix out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            out(static_cast<Eigen::Index>(perm_[i]), static_cast<Eigen::Index>(perm_[j])) = interleaved(i, j);
        }
    }
    return out;
}

Vector ModeInterleaver::interleaved_to_grouped(const Vector& r) const {
    if (r.size() != static_cast<Eigen::Index>(2 * n_)) {
        throw DimensionError("vector does not match interleaver mode count " + std::to_string(n_));
    }
    Vector out(r.size());
    for (Eigen::Index j = 0; j < r.size(); ++j) out(static_cast<Eigen::Index>(perm_[j])) = r(j);
    return out;
}

SymplecticMatrix convert_ordering(const SymplecticMatrix& m) {
    const ModeInterleaver gamma(m.modes());
    if (m.ordering() == Ordering::kGrouped) {
        return SymplecticMatrix::create(gamma.to_interleaved(m.data()), Ordering::kInterleaved, m.tolerance());
    }
    return SymplecticMatrix::create(gamma.to_grouped(m.data()), Ordering::kGrouped, m.tolerance());
}

SymplecticMatrix to_ordering(const SymplecticMatrix& m, Ordering ordering) {
    return m.ordering() == ordering ? m : convert_ordering(m);
}

SymplecticMatrix exp_hamiltonian(const Matrix& symmetric, double tol) {
    const std::size_t n = checked_modes(symmetric);
    if (max_abs(symmetric - symmetric.transpose()) != 0.0) {
        throw InvalidArgumentError("generator must be exactly symmetric");
    }
    const Matrix generator = canonical_form(n, Ordering::kGrouped) * symmetric;
    Matrix m = generator.exp();
    if (!m.allFinite()) throw NumericError("matrix exponential did not converge");
    return SymplecticMatrix::create(std::move(m), Ordering::kGrouped, tol);
}

SymplecticMatrix generate_random(std::size_t n, double scale, std::uint64_t seed, double tol) {
    if (n == 0) throw DimensionError("mode count must be positive");
    if (!(scale > 0.0)) throw InvalidArgumentError("scale must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-scale, scale);
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Matrix s(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = i; j < dim; ++j) {
            s(i, j) = dist(rng);
            s(j, i) = s(i, j);
        }
    }
    return exp_hamiltonian(s, tol);
}

SymplecticMatrix make_nonconnected(const Matrix& b, double cond_cap, double tol) {
    if (b.rows() != b.cols() || b.rows() == 0) throw DimensionError("B must be square and nonempty");
    const double cond = condition_number(b);
    if (!(cond <= cond_cap)) {
        throw SingularityError("B is singular or ill-conditioned (cond = " + std::to_string(cond) +
                               ", cap = " + std::to_string(cond_cap) + ")");
    }
    const Eigen::Index n = b.rows();
    GroupedBlocks blocks{Matrix::Zero(n, n), b, -b.inverse().transpose(), Matrix::Zero(n, n)};
    return SymplecticMatrix::create(assemble(blocks), Ordering::kGrouped, tol);
}

}  // namespace sympcov
