#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "tnla/bd.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"
#include "tnla/neville.hpp"

namespace tnla {

/// Exact rational scalar (GMP-backed, canonical form maintained by the
/// backend). Stands in for the paper's exact-arithmetic reference runs.
using Rational = boost::multiprecision::mpq_rational;

/// Binary float with runtime-configurable precision (MPFR-backed).
using BigFloat = boost::multiprecision::mpfr_float;

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Scoped MPFR working precision; the precision is always an explicit
/// per-call parameter of the oracle entry points, never ambient state that
/// callers have to juggle.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10(bits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

    static unsigned digits10(unsigned bits) {
        return static_cast<unsigned>(static_cast<double>(bits) * 0.3010299957) + 3;
    }

private:
    unsigned saved_;
};

/// Exact BD grid by rational Neville elimination; zero rounding error.
inline BdGrid<Rational> exact_neville_bd(const RationalMatrix& a) {
    return neville_bd<Rational>(a);
}

namespace detail {

struct RationalLu {
    RationalMatrix a;
    std::vector<std::size_t> perm;
};

inline RationalLu rational_lu(RationalMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DimensionMismatch("exact LU needs square input");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw SingularMatrix("exactly singular matrix");
        if (piv != k) {
            std::swap(perm[k], perm[piv]);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a(i, k) /= a(k, k);
            const Rational m = a(i, k);
            if (m != 0)
                for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    return {std::move(a), std::move(perm)};
}

inline RationalVector rational_lu_apply(const RationalLu& lu, const RationalVector& b) {
    const std::size_t n = lu.a.rows();
    RationalVector x(n);
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

/// Exact solution of A x = b in rational arithmetic.
inline RationalVector exact_solve(const RationalMatrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("exact_solve rhs length");
    return detail::rational_lu_apply(detail::rational_lu(a), b);
}

/// Exact inverse in rational arithmetic.
inline RationalMatrix exact_inverse(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    const detail::RationalLu lu = detail::rational_lu(a);
    RationalMatrix inv(n, n);
    RationalVector e(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1;
        const RationalVector col = detail::rational_lu_apply(lu, e);
        e[j] = 0;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

enum class SpectrumKind { eigen_sym, singular };

namespace detail {

/// Cyclic two-sided Jacobi, values only, at the current MPFR precision.
inline std::vector<BigFloat> jacobi_eigenvalues(Matrix<BigFloat> a, unsigned bits) {
    const std::size_t n = a.rows();
    const BigFloat tiny = pow(BigFloat(2), -static_cast<long>(bits) + 4);
    for (int sweep = 0; sweep < 200; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const BigFloat apq = a(p, q);
                if (apq == 0) continue;
                if (abs(apq) <= tiny * (abs(a(p, p)) + abs(a(q, q)))) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                rotated = true;
                const BigFloat theta = (a(q, q) - a(p, p)) / (2 * apq);
                BigFloat t;
                if (theta >= 0)
                    t = 1 / (theta + sqrt(1 + theta * theta));
                else
                    t = -1 / (-theta + sqrt(1 + theta * theta));
                const BigFloat c = 1 / sqrt(1 + t * t);
                const BigFloat s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const BigFloat akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const BigFloat apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
        if (!rotated) {
            std::vector<BigFloat> vals(n);
            for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i);
            std::stable_sort(vals.begin(), vals.end(), std::greater<>());
            return vals;
        }
    }
    throw PrecisionNotReached("Jacobi iteration did not settle");
}

template <class Scalar>
std::vector<BigFloat> spectrum_at(const Matrix<Scalar>& a, SpectrumKind kind,
                                  unsigned bits) {
    PrecisionScope scope(bits);
    const std::size_t m = a.rows(), n = a.cols();
    if (kind == SpectrumKind::eigen_sym) {
        if (m != n) throw DimensionMismatch("eigen_sym needs square input");
        Matrix<BigFloat> w(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (a(i, j) != a(j, i)) throw NotSymmetric("hp_spectrum eigen-sym input");
                w(i, j) = static_cast<BigFloat>(a(i, j));
            }
        return jacobi_eigenvalues(std::move(w), bits);
    }
    // singular values via the Gram matrix; harmless at oracle precision
    Matrix<BigFloat> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigFloat s(0);
            for (std::size_t k = 0; k < m; ++k)
                s += static_cast<BigFloat>(a(k, i)) * static_cast<BigFloat>(a(k, j));
            g(i, j) = s;
        }
    std::vector<BigFloat> lam = jacobi_eigenvalues(std::move(g), bits);
    for (BigFloat& v : lam) v = v <= 0 ? BigFloat(0) : sqrt(v);
    return lam;
}

inline bool agree_to_digits(const std::vector<BigFloat>& lo,
                            const std::vector<BigFloat>& hi, unsigned digits) {
    const BigFloat tol = pow(BigFloat(10), -static_cast<long>(digits));
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (hi[i] == 0) {
            if (lo[i] != 0) return false;
            continue;
        }
        if (abs(BigFloat(lo[i] - hi[i])) > abs(hi[i]) * tol) return false;
    }
    return true;
}

}  // namespace detail

/// Reference spectrum at configurable precision, self-verified: computed at
/// p bits and again at 2p, accepted once the two runs agree to >= 30
/// significant digits (one more doubling is attempted before giving up with
/// PrecisionNotReached). Accepts binary64 or exact rational input.
template <class Scalar = double>
std::vector<BigFloat> hp_spectrum(const Matrix<Scalar>& a, SpectrumKind kind,
                                  unsigned precision_bits = 256) {
    PrecisionScope outer(4 * precision_bits);  // result storage precision
    std::vector<BigFloat> prev = detail::spectrum_at(a, kind, precision_bits);
    unsigned bits = 2 * precision_bits;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<BigFloat> cur = detail::spectrum_at(a, kind, bits);
        if (detail::agree_to_digits(prev, cur, 30)) return cur;
        prev = std::move(cur);
        bits *= 2;
    }
    throw PrecisionNotReached("hp_spectrum failed to stabilize");
}

}  // namespace tnla
