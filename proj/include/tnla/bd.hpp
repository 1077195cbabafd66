#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>

#include "tnla/dense.hpp"
#include "tnla/errors.hpp"

namespace tnla {

/// The bidiagonal-decomposition parameter grid of a nonsingular totally
/// nonnegative matrix.
///
/// For a square grid of order n the encoded matrix is
///
///     A = Fbar_{n-1} ... Fbar_1 * D * Gbar_1 ... Gbar_{n-1}
///
/// where (0-based storage, the formulas in the docs are 1-based):
///   - D = diag(p(0,0), ..., p(n-1,n-1)),
///   - Fbar_k is unit lower bidiagonal with (i, i-1) = p(i, i-k) for i >= k,
///   - Gbar_k is unit upper bidiagonal with (j-1, j) = p(j-k, j) for j >= k.
///
/// Entries below the diagonal are the Neville multipliers of A, entries
/// above are those of A^T, and the diagonal holds the pivots. The same grid
/// simultaneously parameterizes A^{-1}.
///
/// A rectangular m x n grid stands for the leading m x n block of the
/// s x s grid (s = max(m, n)) padded with unit diagonal and zero
/// off-diagonal entries.
template <class Scalar>
class BdGrid {
public:
    BdGrid() = default;
    BdGrid(std::size_t rows, std::size_t cols)
        : p_(rows, cols) {}

    explicit BdGrid(Matrix<Scalar> p) : p_(std::move(p)) {}

    BdGrid(std::initializer_list<std::initializer_list<Scalar>> rows) : p_(rows) {}

    std::size_t rows() const { return p_.rows(); }
    std::size_t cols() const { return p_.cols(); }
    bool square() const { return rows() == cols(); }

    Scalar& operator()(std::size_t i, std::size_t j) { return p_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return p_(i, j); }

    const Matrix<Scalar>& grid() const { return p_; }

    /// Identity grid: unit diagonal, zero off-diagonal (represents I).
    static BdGrid identity(std::size_t n) { return BdGrid(Matrix<Scalar>::identity(n)); }

    /// Throws InvalidBd unless off-diagonal entries are nonnegative, pivots
    /// positive, and (for floating scalars) everything finite.
    void validate() const {
        for (std::size_t i = 0; i < rows(); ++i) {
            for (std::size_t j = 0; j < cols(); ++j) {
                const Scalar& v = p_(i, j);
                if constexpr (std::is_floating_point_v<Scalar>) {
                    if (!std::isfinite(v)) throw InvalidBd("non-finite BD entry");
                }
                if (i == j) {
                    if (!(v > Scalar(0))) throw InvalidBd("nonpositive BD pivot");
                } else {
                    if (v < Scalar(0)) throw InvalidBd("negative BD multiplier");
                }
            }
        }
    }

    friend bool operator==(const BdGrid&, const BdGrid&) = default;

private:
    Matrix<Scalar> p_;
};

using BdMatrix = BdGrid<double>;

/// Entrywise transpose of the grid; represents BD(A^T).
template <class Scalar>
BdGrid<Scalar> bd_transpose(const BdGrid<Scalar>& b) {
    return BdGrid<Scalar>(b.grid().transposed());
}

/// Read-only view of one factor of the decomposition, indexing straight
/// into the grid. Never materializes an n x n array.
template <class Scalar>
struct FactorView {
    enum class Kind { lower, upper, diagonal };

    Kind kind;
    std::size_t k;  // factor index, 1..n-1 (unused for diagonal)
    const BdGrid<Scalar>* source;

    /// Diagonal entry D(j, j).
    const Scalar& pivot(std::size_t j) const { return (*source)(j, j); }

    /// Off-diagonal entry of Fbar_k at (i, i-1), valid for i in [k, n).
    const Scalar& sub(std::size_t i) const { return (*source)(i, i - k); }

    /// Off-diagonal entry of Gbar_k at (j-1, j), valid for j in [k, n).
    const Scalar& super(std::size_t j) const { return (*source)(j - k, j); }
};

namespace detail {

/// Embeds a rectangular grid into the identity-padded square grid of order
/// max(rows, cols). Square grids are returned unchanged.
template <class Scalar>
BdGrid<Scalar> embed_square(const BdGrid<Scalar>& b) {
    if (b.square()) return b;
    const std::size_t s = std::max(b.rows(), b.cols());
    BdGrid<Scalar> full(s, s);
    for (std::size_t i = 0; i < s; ++i) full(i, i) = Scalar(1);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) full(i, j) = b(i, j);
    return full;
}

}  // namespace detail

}  // namespace tnla
