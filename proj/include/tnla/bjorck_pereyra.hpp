#pragma once

#include <cstddef>
#include <vector>

#include "tnla/errors.hpp"
#include "tnla/generators.hpp"

namespace tnla {

/// Stage I of the Bjorck-Pereyra dual solve: divided differences, i.e. the
/// coefficients of the interpolant in the Newton basis (c = U^T f).
///
/// The in-place recurrence mirrors the factored form of the classical
/// algorithm exactly; no reassociation.
template <class Scalar>
std::vector<Scalar> newton_coefficients(const std::vector<Scalar>& x,
                                        std::vector<Scalar> c) {
    if (x.size() != c.size()) throw DimensionMismatch("newton_coefficients lengths");
    if (x.empty()) throw DimensionMismatch("empty node vector");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] == x[i - 1]) throw DuplicateNodes("repeated interpolation node");
    detail::require_strictly_increasing(x);
    const std::size_t n = x.size() - 1;  // polynomial degree
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n; i >= k + 1; --i)
            c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - k - 1]);
    return c;
}

/// Stage II: change of basis from Newton to monomial coefficients
/// (a = L^T c), ascending degree order.
template <class Scalar>
std::vector<Scalar> newton_to_monomial(const std::vector<Scalar>& x,
                                       std::vector<Scalar> a) {
    if (x.size() != a.size()) throw DimensionMismatch("newton_to_monomial lengths");
    if (a.empty()) return a;
    const std::size_t n = x.size() - 1;
    for (std::size_t k = n; k-- > 0;)
        for (std::size_t i = k; i < n; ++i) a[i] -= x[k] * a[i + 1];
    return a;
}

/// Solves the dual Vandermonde (polynomial interpolation) system
/// sum_j a_j x_i^j = f_i in O(n^2): divided differences, then the
/// Newton-to-monomial change of basis.
template <class Scalar>
std::vector<Scalar> bp_dual_solve(const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& f) {
    return newton_to_monomial(x, newton_coefficients(x, f));
}

}  // namespace tnla
