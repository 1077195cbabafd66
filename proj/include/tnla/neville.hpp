#pragma once

#include <cstddef>
#include <type_traits>

#include "tnla/bd.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"

namespace tnla {

namespace detail {

/// Neville elimination of the lower triangle: each entry is zeroed with the
/// row immediately above. Writes the multipliers into the lower part of
/// `out` and returns with `work` upper triangular. Throws
/// NotTotallyNonnegative when a row exchange would be required or a
/// multiplier comes out negative.
template <class Scalar>
void neville_lower(Matrix<Scalar> work, BdGrid<Scalar>& out, bool transpose) {
    const std::size_t n = work.rows();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = n - 1; i > j; --i) {
            const Scalar& pivot = work(i - 1, j);
            const Scalar& entry = work(i, j);
            Scalar m(0);
            if (pivot == Scalar(0)) {
                // a zero under a zero pivot is fine (multiplier 0); anything
                // else needs a row exchange
                if (entry != Scalar(0))
                    throw NotTotallyNonnegative("zero pivot under nonzero entry");
            } else {
                m = entry / pivot;
            }
            if (m < Scalar(0)) throw NotTotallyNonnegative("negative Neville multiplier");
            if (transpose)
                out(j, i) = m;
            else
                out(i, j) = m;
            if (m != Scalar(0))
                for (std::size_t c = j; c < n; ++c) work(i, c) -= m * work(i - 1, c);
        }
    }
    if (!transpose) {
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& d = work(j, j);
            if constexpr (std::is_floating_point_v<Scalar>) {
                if (!std::isfinite(d)) throw NotTotallyNonnegative("non-finite pivot");
            }
            if (!(d > Scalar(0))) throw NotTotallyNonnegative("nonpositive pivot");
            out(j, j) = d;
        }
    }
}

}  // namespace detail

/// Computes BD(A) by Neville elimination of A (lower parameters and pivots)
/// and of A^T (upper parameters).
///
/// This is the generic route from a dense matrix to its BD and the exact
/// characterization of nonsingular total nonnegativity (it succeeds iff no
/// row exchange is needed, all multipliers are nonnegative and all pivots
/// positive). It involves true subtractions, so unlike the structured
/// generators it does NOT guarantee high relative accuracy of the computed
/// parameters.
template <class Scalar>
BdGrid<Scalar> neville_bd(const Matrix<Scalar>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("neville_bd needs square input");
    const std::size_t n = a.rows();
    BdGrid<Scalar> out(n, n);
    detail::neville_lower(a, out, /*transpose=*/false);
    detail::neville_lower(a.transposed(), out, /*transpose=*/true);
    return out;
}

}  // namespace tnla
