#pragma once

#include <cmath>
#include <cstddef>

#include "tnla/bd.hpp"
#include "tnla/bidiagonal_svd.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"

namespace tnla {

namespace detail {

/// Orthogonal factor elimination on a BD grid.
///
/// One Givens rotation on rows (r-1, r) annihilates the grid parameter
/// P(r, c) -- the elementary factor E_r of Fbar_{r-c} -- and the grid is
/// restored to canonical BD form of the rotated matrix. The restoration
/// passes a 2x2 wavefront through the remaining lower factors (a swap at
/// each same-position elementary, scalings at the row neighbours), folds it
/// into the diagonal, and lets the emitted upper elementary ripple into the
/// upper factor chain: it merges along grid row r-1 while rescaling row r.
/// Apart from the Givens hypot, every update is a product, quotient, or sum
/// of nonnegative quantities.
///
/// The target must be leftmost among the lower factors at rows r-1, r, r+1;
/// the schedules below guarantee that. In mirrored mode all grid accesses
/// are transposed, which turns the same code into a right-rotation
/// eliminating an upper parameter.
class GridEliminator {
public:
    GridEliminator(BdMatrix& p, bool mirrored = false, DenseMatrix* qacc = nullptr)
        : p_(p), q_(qacc), n_(p.rows()), mirrored_(mirrored) {}

    void eliminate_lower(std::size_t r, std::size_t c) {
        check_exposed(r, c);
        const double b = at(r, c);
        if (b == 0.0) return;
        at(r, c) = 0.0;
        const double rho = std::hypot(1.0, b);
        if (q_) accumulate(r, 1.0 / rho, b / rho);
        double d1 = rho;
        double d2 = 1.0 / rho;
        double g = (b / rho) / rho;
        const std::size_t kfac = r - c;
        for (std::size_t k = kfac; k >= 1; --k) {
            if (k < kfac) {
                if (r - 1 >= k) at(r - 1, r - 1 - k) *= d1;
                const double m = at(r, r - k);
                const double den = 1.0 + g * m;
                at(r, r - k) = d2 * m / (d1 * den);
                d1 *= den;
                d2 /= den;
                g /= den;
            }
            if (r + 1 < n_) at(r + 1, r + 1 - k) /= d2;
        }
        g *= at(r, r) / at(r - 1, r - 1);
        at(r - 1, r - 1) *= d1;
        at(r, r) *= d2;
        std::size_t col = r;
        double fill = g;
        while (fill != 0.0 && col < n_) {
            const double old = at(r - 1, col);
            const double sum = old + fill;
            at(r - 1, col) = sum;
            if (col + 1 >= n_) break;
            const double below = at(r, col + 1);
            at(r, col + 1) = below * (old / sum);
            fill = below * (fill / sum);
            ++col;
        }
    }

private:
    double& at(std::size_t i, std::size_t j) { return mirrored_ ? p_(j, i) : p_(i, j); }
    const double& at(std::size_t i, std::size_t j) const {
        return mirrored_ ? p_(j, i) : p_(i, j);
    }

    void check_exposed(std::size_t r, std::size_t c) const {
        bool ok = r > c && r < n_;
        for (std::size_t j = 0; ok && j < c; ++j)
            ok = at(r - 1, j) == 0.0 && at(r, j) == 0.0;
        if (ok && r + 1 < n_)
            for (std::size_t j = 0; ok && j <= c; ++j) ok = at(r + 1, j) == 0.0;
        if (!ok) throw ReductionFailure("elimination target not exposed");
    }

    void accumulate(std::size_t r, double cs, double sn) {
        for (std::size_t i = 0; i < q_->rows(); ++i) {
            const double qp = (*q_)(i, r - 1);
            const double qr = (*q_)(i, r);
            (*q_)(i, r - 1) = cs * qp + sn * qr;
            (*q_)(i, r) = -sn * qp + cs * qr;
        }
    }

    BdMatrix& p_;
    DenseMatrix* q_;
    std::size_t n_;
    bool mirrored_;
};

/// Clears every lower parameter, column-major bottom-up. This turns the
/// grid into BD(R) of the QR factorization A = Q R.
inline void clear_lower_factors(BdMatrix& p, DenseMatrix* qacc = nullptr) {
    GridEliminator elim(p, false, qacc);
    const std::size_t n = p.rows();
    for (std::size_t c = 0; c + 1 < n; ++c)
        for (std::size_t r = n - 1; r > c; --r) elim.eliminate_lower(r, c);
}

}  // namespace detail

/// Reduces a square BD grid to an upper bidiagonal matrix with exactly the
/// singular values of the represented matrix.
///
/// Two phases of Givens eliminations on the parameter grid: first all lower
/// factors (left rotations, column-major bottom-up), then, row by row, the
/// upper parameters beyond the first superdiagonal (right rotations,
/// right-to-left, each followed by a left rotation chasing the single lower
/// bulge it creates). Finished rows are never touched again, so the process
/// terminates after O(n^2) rotations leaving D' Gbar_1', i.e. the
/// bidiagonal with q_i = d_i and e_i = d_i g_{i+1}.
inline Bidiagonal reduce_to_upper_bidiagonal(const BdMatrix& b) {
    if (!b.square()) throw DimensionMismatch("reduce_to_upper_bidiagonal needs square BD");
    b.validate();
    BdMatrix p = b;
    const std::size_t n = p.rows();
    detail::clear_lower_factors(p);
    detail::GridEliminator left(p);
    detail::GridEliminator right(p, /*mirrored=*/true);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t c = n - 1; c > i + 1; --c) {
            if (p(i, c) == 0.0) continue;
            right.eliminate_lower(c, i);
            if (p(c, c - 1) != 0.0) left.eliminate_lower(c, c - 1);
        }
    }
    Bidiagonal out;
    out.q.resize(n);
    out.e.resize(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        out.q[i] = p(i, i);
        if (i + 1 < n) out.e[i] = p(i, i) * p(i, i + 1);
    }
    for (double v : out.q)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ReductionFailure("nonnegativity lost in reduction");
    for (double v : out.e)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ReductionFailure("nonnegativity lost in reduction");
    return out;
}

}  // namespace tnla
