#pragma once

#include <cstddef>
#include <vector>

#include "tnla/bd.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"
#include "tnla/expand.hpp"
#include "tnla/reduction.hpp"

namespace tnla {

/// QR factorization of a TN matrix held in BD form: Q dense with
/// orthonormal columns, R kept as a BD grid with zero lower part (so R stays
/// available to the high-relative-accuracy solvers).
struct QrResult {
    DenseMatrix q;
    BdMatrix r;
};

/// Computes Q and BD(R) for an m x n grid with m >= n.
///
/// The grid (identity-padded to square if rectangular) is cleared of its
/// lower parameters by the Givens elimination schedule of the reduction
/// module while the rotations accumulate into Q; R's parameters stay
/// nonnegative throughout. With `full_q` the m x m factor is returned
/// instead of the thin m x n block.
inline QrResult tn_qr(const BdMatrix& b, bool full_q = false) {
    if (b.rows() < b.cols()) throw DimensionMismatch("tn_qr needs m >= n");
    b.validate();
    const std::size_t m = b.rows();
    const std::size_t n = b.cols();
    BdMatrix p = detail::embed_square(b);
    DenseMatrix q = DenseMatrix::identity(m);
    detail::clear_lower_factors(p, &q);
    QrResult out;
    out.r = BdMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.r(i, j) = p(i, j);
    if (full_q) {
        out.q = std::move(q);
    } else {
        out.q = DenseMatrix(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) out.q(i, j) = q(i, j);
    }
    return out;
}

/// Least squares: x minimizing ||A x - b||_2 for A = tn_expand(B), solved
/// as R x = Q^T b with the structured solver on BD(R).
inline Vector tn_lsq_solve(const BdMatrix& b, const Vector& rhs) {
    if (rhs.size() != b.rows()) throw DimensionMismatch("tn_lsq_solve rhs length");
    const QrResult qr = tn_qr(b);
    const std::size_t m = b.rows();
    const std::size_t n = b.cols();
    Vector qtb(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) qtb[j] += qr.q(i, j) * rhs[i];
    return tn_solve(qr.r, qtb);
}

}  // namespace tnla
