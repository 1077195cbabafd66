#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tnla/bidiagonal_svd.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"

namespace tnla {

namespace detail {

/// LU with partial pivoting, factors kept packed in `a`.
struct PackedLu {
    DenseMatrix a;
    std::vector<std::size_t> perm;
};

inline PackedLu lu_factor(DenseMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DimensionMismatch("lu_factor needs square input");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) throw SingularMatrix("singular to working precision");
        if (piv != k) {
            std::swap(perm[k], perm[piv]);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a(i, k) /= a(k, k);
            const double m = a(i, k);
            if (m != 0.0)
                for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    return {std::move(a), std::move(perm)};
}

inline Vector lu_apply(const PackedLu& lu, const Vector& b) {
    const std::size_t n = lu.a.rows();
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[lu.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= lu.a(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu.a(i, j) * x[j];
        x[i] /= lu.a(i, i);
    }
    return x;
}

}  // namespace detail

/// Conventional dense solve: Gaussian elimination with partial pivoting.
/// Accuracy degrades with the condition number, which is the point of this
/// module -- it is the structure-blind comparison method.
inline Vector lu_solve(const DenseMatrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("lu_solve rhs length");
    return detail::lu_apply(detail::lu_factor(a), b);
}

/// Conventional dense inverse via one LU factorization.
inline DenseMatrix lu_inverse(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    const detail::PackedLu lu = detail::lu_factor(a);
    DenseMatrix inv(n, n);
    Vector e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const Vector col = detail::lu_apply(lu, e);
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

/// Conventional symmetric eigenvalues: Householder tridiagonalization
/// followed by shifted QL iteration. Absolute-accuracy class.
inline Spectrum dense_eig_sym(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DimensionMismatch("dense_eig_sym needs square input");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) throw NotSymmetric("dense_eig_sym needs symmetry");

    // Householder reduction to tridiagonal (diagonal d, subdiagonal e)
    DenseMatrix w = a;
    std::vector<double> d(n), e(n, 0.0);
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(w(i, k));
            if (scale == 0.0) {
                e[i] = w(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    w(i, k) /= scale;
                    h += w(i, k) * w(i, k);
                }
                double f = w(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                w(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += w(j, k) * w(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += w(k, j) * w(i, k);
                    e[j] = g / h;
                    f += e[j] * w(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = w(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::size_t k = 0; k <= j; ++k)
                        w(j, k) -= f * e[k] + g * w(i, k);
                }
            }
        } else {
            e[i] = w(i, l);
        }
        d[i] = h;
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = w(i, i);

    // shifted QL iteration (tql1 style)
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= DBL_EPSILON * dd) break;
            }
            if (m != l) {
                if (++iter == 50) throw NoConvergence("dense_eig_sym QL iteration");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflowed = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflowed = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflowed) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::stable_sort(d.begin(), d.end(), std::greater<>());
    return {std::move(d), Spectrum::Kind::eigen};
}

/// Conventional singular values: Householder bidiagonalization, then the
/// bidiagonal kernel. The bidiagonalization step itself destroys the tiny
/// singular values of ill-conditioned matrices, which reproduces the
/// accuracy behaviour of the standard dense SVD.
inline Spectrum dense_svd(const DenseMatrix& a_in) {
    DenseMatrix a = (a_in.rows() >= a_in.cols()) ? a_in : a_in.transposed();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (n == 0) throw DimensionMismatch("dense_svd on empty matrix");

    auto house_left = [&](std::size_t k) {
        double scale = 0.0;
        for (std::size_t i = k; i < m; ++i) scale = std::max(scale, std::fabs(a(i, k)));
        if (scale == 0.0) return;
        double s = 0.0;
        for (std::size_t i = k; i < m; ++i) {
            a(i, k) /= scale;
            s += a(i, k) * a(i, k);
        }
        double f = a(k, k);
        const double g = (f >= 0.0) ? -std::sqrt(s) : std::sqrt(s);
        const double h = f * g - s;
        a(k, k) = f - g;
        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += a(i, k) * a(i, j);
            const double t = dot / h;
            for (std::size_t i = k; i < m; ++i) a(i, j) += t * a(i, k);
        }
        for (std::size_t i = k; i < m; ++i) a(i, k) = 0.0;
        a(k, k) = g * scale;
    };
    auto house_right = [&](std::size_t k) {
        double scale = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) scale = std::max(scale, std::fabs(a(k, j)));
        if (scale == 0.0) return;
        double s = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) {
            a(k, j) /= scale;
            s += a(k, j) * a(k, j);
        }
        double f = a(k, k + 1);
        const double g = (f >= 0.0) ? -std::sqrt(s) : std::sqrt(s);
        const double h = f * g - s;
        a(k, k + 1) = f - g;
        for (std::size_t i = k + 1; i < m; ++i) {
            double dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += a(k, j) * a(i, j);
            const double t = dot / h;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) += t * a(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0.0;
        a(k, k + 1) = g * scale;
    };

    for (std::size_t k = 0; k < n; ++k) {
        house_left(k);
        if (k + 2 < n) house_right(k);
    }
    Bidiagonal bd;
    bd.q.resize(n);
    bd.e.resize(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        bd.q[i] = std::fabs(a(i, i));
        if (i + 1 < n) bd.e[i] = std::fabs(a(i, i + 1));
    }
    return bidiagonal_sv(bd);
}

}  // namespace tnla
