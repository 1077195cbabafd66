#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tnla/bd.hpp"
#include "tnla/dense.hpp"
#include "tnla/oracle.hpp"

namespace fixtures {

using tnla::BdMatrix;
using tnla::DenseMatrix;
using tnla::Rational;
using tnla::RationalMatrix;
using tnla::RationalVector;
using tnla::Vector;

/// BD grid of the Durer totally positive matrix. The engraving's magic
/// square with the (1,3) entry corrected to 2, which is what the printed
/// factorization and expansion pin down.
inline BdMatrix durer_grid() {
    return BdMatrix{{16, 3, 2, 13}, {5, 10, 11, 8}, {9, 6, 7, 12}, {4, 15, 14, 1}};
}

inline DenseMatrix durer_dense() {
    return DenseMatrix{{16, 48, 96, 1248},
                       {80, 250, 610, 8810},
                       {720, 2310, 6277, 94941},
                       {2880, 10140, 37011, 617764}};
}

inline BdMatrix vandermonde_2358_grid() {
    return BdMatrix{{1, 2, 2, 2}, {1, 1, 3, 3}, {1, 2, 6, 5}, {1, 1.5, 2.5, 90}};
}

inline DenseMatrix vandermonde_2358_dense() {
    return DenseMatrix{{1, 2, 4, 8}, {1, 3, 9, 27}, {1, 5, 25, 125}, {1, 8, 64, 512}};
}

/// The alternating right-hand side of the classical order-7 experiments.
inline Vector alternating_f7() {
    return {1.0 / 21, -1.0 / 21, 1.0 / 23, -1.0 / 23, 1.0 / 29, -1.0 / 29, 1.0 / 31};
}

inline RationalVector alternating_f7_exact() {
    return {Rational(1, 21),  Rational(-1, 21), Rational(1, 23), Rational(-1, 23),
            Rational(1, 29), Rational(-1, 29), Rational(1, 31)};
}

inline RationalMatrix hilbert_exact(std::size_t n) {
    RationalMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = Rational(1, static_cast<long>(i + j + 1));
    return h;
}

inline DenseMatrix hilbert_dense(std::size_t n) {
    DenseMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 1.0 / static_cast<double>(i + j + 1);
    return h;
}

/// Binomial Pascal matrix P[i][j] = C(i+j, i).
inline DenseMatrix pascal_dense(std::size_t n) {
    DenseMatrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) p(0, j) = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        p(i, 0) = 1.0;
        for (std::size_t j = 1; j < n; ++j) p(i, j) = p(i - 1, j) + p(i, j - 1);
    }
    return p;
}

/// Vandermonde matrix V[i][j] = x_i^j for integer nodes (exact in binary64
/// while the powers stay under 2^53).
inline DenseMatrix vandermonde_dense(const Vector& x) {
    const std::size_t n = x.size();
    DenseMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, 0) = 1.0;
        for (std::size_t j = 1; j < n; ++j) v(i, j) = v(i, j - 1) * x[i];
    }
    return v;
}

/// Grid with every entry (including off-diagonals) drawn from [lo, hi],
/// for the strict componentwise round-trip property.
inline BdMatrix random_positive_grid(std::size_t n, std::uint64_t seed, double lo,
                                     double hi) {
    std::mt19937_64 eng(seed);
    auto uniform01 = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    BdMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = lo + (hi - lo) * uniform01();
    return b;
}

/// Mixed error |a-b| / (1 + |b|): relative for O(1)-and-larger parameters,
/// absolute for the near-zero multipliers a random_tn_bd grid may contain.
inline double max_mixed_error(const BdMatrix& a, const BdMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::fabs(a(i, j) - b(i, j)) / (1.0 + std::fabs(b(i, j))));
    return worst;
}

/// Leading m x n block of a BD grid (the BD of the leading submatrix).
inline BdMatrix leading_subgrid(const BdMatrix& b, std::size_t m, std::size_t n) {
    BdMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = b(i, j);
    return out;
}

/// Exact embedding of binary64 data into rationals.
inline RationalMatrix to_rational(const DenseMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

inline RationalVector to_rational(const Vector& v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(boost::multiprecision::mpf_float_100(r));
}

inline double to_double_big(const tnla::BigFloat& v) { return static_cast<double>(v); }

/// Relative Euclidean error ||x - ref|| / ||ref||, reference in rationals.
inline double rel_euclidean_error(const Vector& x, const RationalVector& ref) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = to_double(ref[i]);
        const double d = x[i] - r;
        num += d * d;
        den += r * r;
    }
    return std::sqrt(num / den);
}

inline double max_componentwise_rel_error(const DenseMatrix& a, const RationalMatrix& ref) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double r = to_double(ref(i, j));
            if (r == 0.0) {
                if (a(i, j) != 0.0) worst = std::max(worst, 1.0);
            } else {
                worst = std::max(worst, std::fabs(a(i, j) - r) / std::fabs(r));
            }
        }
    return worst;
}

inline double max_componentwise_rel_error(const BdMatrix& a, const BdMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double r = b(i, j);
            if (r == 0.0) {
                if (a(i, j) != 0.0) worst = std::max(worst, 1.0);
            } else {
                worst = std::max(worst, std::fabs(a(i, j) - r) / std::fabs(r));
            }
        }
    return worst;
}

}  // namespace fixtures
