#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tnla/bd.hpp"
#include "tnla/errors.hpp"

namespace tnla {

namespace detail {

template <class Scalar>
void require_strictly_increasing(const std::vector<Scalar>& x) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i - 1] < x[i])) throw NodesNotSorted("nodes must strictly increase");
}

}  // namespace detail

/// BD of the Vandermonde matrix V[i][j] = x_i^{j-1} for nonnegative,
/// strictly increasing nodes.
///
/// Every parameter is a product of quotients of differences of sorted
/// nodes, evaluated in sorted order, so the construction is
/// subtraction-free.
template <class Scalar>
BdGrid<Scalar> vandermonde_bd(const std::vector<Scalar>& x) {
    detail::require_strictly_increasing(x);
    if (x.empty()) throw BadRange("empty node vector");
    if (x.front() < Scalar(0)) throw NegativeNode("Vandermonde nodes must be >= 0");
    const std::size_t n = x.size();
    BdGrid<Scalar> b(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Scalar d(1);
        for (std::size_t k = 0; k < j; ++k) d *= x[j] - x[k];
        b(j, j) = d;
        for (std::size_t i = j + 1; i < n; ++i) b(j, i) = x[j];  // upper: node itself
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Scalar m(1);
            for (std::size_t k = 1; k <= j; ++k)
                m *= (x[i] - x[i - k]) / (x[i - 1] - x[i - 1 - k]);
            b(i, j) = m;
        }
    }
    return b;
}

/// BD of the Cauchy matrix C[i][j] = 1/(x_i + y_j).
///
/// The multiplier closed forms are ratios of contiguous-minor products; all
/// factors (x_i - x_k), (y_j - y_l), (x_i + y_j) are positive for sorted
/// nodes with positive pair sums, so the evaluation is subtraction-free.
/// Validated against exact-rational Neville elimination in the test suite.
template <class Scalar>
BdGrid<Scalar> cauchy_bd(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    detail::require_strictly_increasing(x);
    detail::require_strictly_increasing(y);
    if (x.size() != y.size() || x.empty()) throw DimensionMismatch("cauchy node lengths");
    if (!(x.front() + y.front() > Scalar(0)))
        throw SingularPair("need x_i + y_j > 0 for all pairs");
    const std::size_t n = x.size();
    BdGrid<Scalar> b(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Scalar num(1), den(x[j] + y[j]);
        for (std::size_t k = 0; k < j; ++k) {
            num *= (x[j] - x[k]) * (y[j] - y[k]);
            den *= (x[j] + y[k]) * (x[k] + y[j]);
        }
        b(j, j) = num / den;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) {
                Scalar m(1);
                for (std::size_t k = 1; k <= j; ++k)
                    m *= (x[i] - x[i - k]) / (x[i - 1] - x[i - 1 - k]);
                for (std::size_t c = 0; c <= j; ++c) m *= (x[i - 1] + y[c]) / (x[i] + y[c]);
                m *= (x[i - j - 1] + y[j]) / (x[i - 1] + y[j]);
                b(i, j) = m;
            } else if (i < j) {
                Scalar m(1);
                for (std::size_t k = 1; k <= i; ++k)
                    m *= (y[j] - y[j - k]) / (y[j - 1] - y[j - 1 - k]);
                for (std::size_t c = 0; c <= i; ++c) m *= (y[j - 1] + x[c]) / (y[j] + x[c]);
                m *= (y[j - i - 1] + x[i]) / (y[j - 1] + x[i]);
                b(i, j) = m;
            }
        }
    }
    return b;
}

/// BD of the n x n Hilbert matrix: Cauchy nodes x = (0..n-1), y = (1..n).
template <class Scalar = double>
BdGrid<Scalar> hilbert_bd(std::size_t n) {
    std::vector<Scalar> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = Scalar(static_cast<long>(i));
        y[i] = Scalar(static_cast<long>(i + 1));
    }
    return cauchy_bd(x, y);
}

/// BD of the symmetric binomial Pascal matrix: the all-ones grid.
template <class Scalar = double>
BdGrid<Scalar> pascal_bd(std::size_t n) {
    if (n == 0) throw BadRange("pascal_bd needs n >= 1");
    BdGrid<Scalar> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = Scalar(1);
    return b;
}

/// Seed-reproducible random TN instance: diagonal in [lo, hi], off-diagonal
/// in [0, hi]. Any such grid is a valid BD, so the result is TN by
/// construction.
inline BdMatrix random_tn_bd(std::size_t n, std::uint64_t seed, double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
        throw BadRange("need 0 < lo <= hi finite");
    if (n == 0) throw BadRange("random_tn_bd needs n >= 1");
    std::mt19937_64 eng(seed);
    // fixed 53-bit uniform so the stream is identical across platforms
    auto uniform01 = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    BdMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b(i, j) = (i == j) ? lo + uniform01() * (hi - lo) : uniform01() * hi;
    return b;
}

}  // namespace tnla
