#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "tnla/bd.hpp"
#include "tnla/bidiagonal_svd.hpp"
#include "tnla/errors.hpp"
#include "tnla/reduction.hpp"

namespace tnla {

/// All singular values of the TN matrix represented by a square BD grid,
/// each to high relative accuracy regardless of conditioning.
inline Spectrum tn_singular_values(const BdMatrix& b) {
    Spectrum s = bidiagonal_sv(reduce_to_upper_bidiagonal(b));
    s.kind = Spectrum::Kind::singular;
    return s;
}

/// Eigenvalues of a symmetric TN matrix given by its (symmetric) BD grid.
///
/// A symmetric grid represents a symmetric matrix because
/// BD(A^T) = BD(A)^T, and a symmetric nonsingular TN matrix is positive
/// definite, so the eigenvalues coincide with the singular values.
inline Spectrum tn_eigenvalues_sym(const BdMatrix& b) {
    if (!b.square()) throw DimensionMismatch("tn_eigenvalues_sym needs square BD");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i + 1; j < b.cols(); ++j)
            if (b(i, j) != b(j, i)) throw NotSymmetric("BD grid is not symmetric");
    Spectrum s = tn_singular_values(b);
    s.kind = Spectrum::Kind::eigen;
    return s;
}

/// Symmetric positive definite tridiagonal in LDL^T form: diagonal of D and
/// subdiagonal of the unit bidiagonal L. For a totally nonnegative
/// tridiagonal matrix this LDL^T is exactly its bidiagonal decomposition.
struct TridiagLdlt {
    std::vector<double> d;  // length n, > 0
    std::vector<double> l;  // length n-1, >= 0

    void validate() const {
        if (d.empty() || l.size() + 1 != d.size())
            throw DimensionMismatch("TridiagLdlt array lengths");
        for (double v : d)
            if (!(v > 0.0) || !std::isfinite(v)) throw InvalidBd("LDL^T diagonal");
        for (double v : l)
            if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidBd("LDL^T subdiagonal");
    }
};

/// Eigenvalues of L D L^T as the squared singular values of (L D^{1/2})^T,
/// an upper bidiagonal with q_i = sqrt(d_i), e_i = l_i sqrt(d_i). Forming
/// it is subtraction-free, so high relative accuracy is preserved.
inline Spectrum tridiag_eigenvalues_ldlt(const TridiagLdlt& t) {
    t.validate();
    const std::size_t n = t.d.size();
    Bidiagonal b;
    b.q.resize(n);
    b.e.resize(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        b.q[i] = std::sqrt(t.d[i]);
        if (i + 1 < n) b.e[i] = t.l[i] * b.q[i];
    }
    Spectrum s = bidiagonal_sv(b);
    for (double& v : s.values) v = v * v;
    s.kind = Spectrum::Kind::eigen;
    return s;
}

/// Spectral condition number sigma_max / sigma_min.
inline double cond2(const BdMatrix& b) {
    const Spectrum s = tn_singular_values(b);
    return s.values.front() / s.values.back();
}

}  // namespace tnla
