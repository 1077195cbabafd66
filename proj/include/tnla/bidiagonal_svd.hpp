#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tnla/errors.hpp"

namespace tnla {

/// Upper bidiagonal matrix: diagonal q (length n) and superdiagonal e
/// (length n-1), both nonnegative.
struct Bidiagonal {
    std::vector<double> q;
    std::vector<double> e;

    std::size_t size() const { return q.size(); }

    void validate() const {
        if (q.empty() || e.size() + 1 != q.size())
            throw DimensionMismatch("bidiagonal array lengths");
        for (double v : q)
            if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidBd("bidiagonal diagonal");
        for (double v : e)
            if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidBd("bidiagonal superdiagonal");
    }
};

/// A computed spectrum, sorted descending.
struct Spectrum {
    enum class Kind { singular, eigen };
    std::vector<double> values;
    Kind kind = Kind::singular;
};

namespace detail {

// unit roundoff (half an ulp), as in LAPACK's DLAMCH('E')
inline constexpr double kUnitRoundoff = DBL_EPSILON / 2;

/// Singular values of [f g; 0 h] without overflow (LAPACK dlas2 scheme).
inline void singular_values_2x2(double f, double g, double h, double& ssmin,
                                double& ssmax) {
    const double fa = std::fabs(f), ga = std::fabs(g), ha = std::fabs(h);
    const double fhmn = std::min(fa, ha), fhmx = std::max(fa, ha);
    if (fhmn == 0.0) {
        ssmin = 0.0;
        if (fhmx == 0.0) {
            ssmax = ga;
        } else {
            const double d = std::min(fhmx, ga) / std::max(fhmx, ga);
            ssmax = std::max(fhmx, ga) * std::sqrt(1.0 + d * d);
        }
        return;
    }
    if (ga < fhmx) {
        const double as = 1.0 + fhmn / fhmx;
        const double at = (fhmx - fhmn) / fhmx;
        const double au = (ga / fhmx) * (ga / fhmx);
        const double c = 2.0 / (std::sqrt(as * as + au) + std::sqrt(at * at + au));
        ssmin = fhmn * c;
        ssmax = fhmx / c;
        return;
    }
    const double au = fhmx / ga;
    if (au == 0.0) {
        // ga so huge that fhmx/ga underflows
        ssmin = (fhmn * fhmx) / ga;
        ssmax = ga;
        return;
    }
    const double as = 1.0 + fhmn / fhmx;
    const double at = (fhmx - fhmn) / fhmx;
    const double c =
        1.0 / (std::sqrt(1.0 + (as * au) * (as * au)) + std::sqrt(1.0 + (at * au) * (at * au)));
    ssmin = 2.0 * (fhmn * c) * au;
    ssmax = ga / (c + c);
}

struct Rotation {
    double cs, sn, r;
};

inline Rotation make_rotation(double f, double g) {
    if (g == 0.0) return {1.0, 0.0, f};
    if (f == 0.0) return {0.0, 1.0, g};
    const double r = std::hypot(f, g);
    return {f / r, g / r, r};
}

inline void zero_shift_sweep_down(std::vector<double>& d, std::vector<double>& e,
                                  std::size_t ll, std::size_t m) {
    double cs = 1.0, oldcs = 1.0, oldsn = 0.0;
    for (std::size_t i = ll; i < m; ++i) {
        auto r1 = make_rotation(d[i] * cs, e[i]);
        cs = r1.cs;
        if (i != ll) e[i - 1] = oldsn * r1.r;
        auto r2 = make_rotation(oldcs * r1.r, d[i + 1] * r1.sn);
        oldcs = r2.cs;
        oldsn = r2.sn;
        d[i] = r2.r;
    }
    const double h = d[m] * cs;
    e[m - 1] = h * oldsn;
    d[m] = h * oldcs;
}

inline void zero_shift_sweep_up(std::vector<double>& d, std::vector<double>& e,
                                std::size_t ll, std::size_t m) {
    double cs = 1.0, oldcs = 1.0, oldsn = 0.0;
    for (std::size_t i = m; i > ll; --i) {
        auto r1 = make_rotation(d[i] * cs, e[i - 1]);
        cs = r1.cs;
        if (i != m) e[i] = oldsn * r1.r;
        auto r2 = make_rotation(oldcs * r1.r, d[i - 1] * r1.sn);
        oldcs = r2.cs;
        oldsn = r2.sn;
        d[i] = r2.r;
    }
    const double h = d[ll] * cs;
    e[ll] = h * oldsn;
    d[ll] = h * oldcs;
}

inline void shifted_sweep_down(std::vector<double>& d, std::vector<double>& e,
                               std::size_t ll, std::size_t m, double shift) {
    double f = (std::fabs(d[ll]) - shift) * ((d[ll] >= 0.0 ? 1.0 : -1.0) + shift / d[ll]);
    double g = e[ll];
    for (std::size_t i = ll; i < m; ++i) {
        auto rr = make_rotation(f, g);
        if (i > ll) e[i - 1] = rr.r;
        f = rr.cs * d[i] + rr.sn * e[i];
        e[i] = rr.cs * e[i] - rr.sn * d[i];
        g = rr.sn * d[i + 1];
        d[i + 1] = rr.cs * d[i + 1];
        auto rl = make_rotation(f, g);
        d[i] = rl.r;
        f = rl.cs * e[i] + rl.sn * d[i + 1];
        d[i + 1] = rl.cs * d[i + 1] - rl.sn * e[i];
        if (i + 1 < m) {
            g = rl.sn * e[i + 1];
            e[i + 1] = rl.cs * e[i + 1];
        }
    }
    e[m - 1] = f;
}

inline void shifted_sweep_up(std::vector<double>& d, std::vector<double>& e,
                             std::size_t ll, std::size_t m, double shift) {
    double f = (std::fabs(d[m]) - shift) * ((d[m] >= 0.0 ? 1.0 : -1.0) + shift / d[m]);
    double g = e[m - 1];
    for (std::size_t i = m; i > ll; --i) {
        auto rr = make_rotation(f, g);
        if (i < m) e[i] = rr.r;
        f = rr.cs * d[i] + rr.sn * e[i - 1];
        e[i - 1] = rr.cs * e[i - 1] - rr.sn * d[i];
        g = rr.sn * d[i - 1];
        d[i - 1] = rr.cs * d[i - 1];
        auto rl = make_rotation(f, g);
        d[i] = rl.r;
        f = rl.cs * e[i - 1] + rl.sn * d[i - 1];
        d[i - 1] = rl.cs * d[i - 1] - rl.sn * e[i - 1];
        if (i > ll + 1) {
            g = rl.sn * e[i - 2];
            e[i - 2] = rl.cs * e[i - 2];
        }
    }
    e[ll] = f;
}

}  // namespace detail

/// All singular values of a nonnegative upper bidiagonal matrix, each to
/// high relative accuracy independent of conditioning; descending order.
///
/// Implicit zero-shift QR (square-root form) with the standard relative
/// deflation recurrences; shifted Golub-Kahan sweeps are taken only when
/// the block's relative spread makes them harmless to the tiny singular
/// values (the dbdsqr safety test). Throws NoConvergence once 30*n^2 inner
/// steps are exhausted.
inline Spectrum bidiagonal_sv(const Bidiagonal& bd) {
    bd.validate();
    std::vector<double> d = bd.q;
    std::vector<double> e = bd.e;
    const std::size_t n = d.size();
    if (n == 1) return {{std::fabs(d[0])}, Spectrum::Kind::singular};

    using detail::kUnitRoundoff;
    const double tol =
        std::max(10.0, std::min(100.0, std::pow(kUnitRoundoff, -0.125))) * kUnitRoundoff;
    const long budget = static_cast<long>(30.0 * static_cast<double>(n) * static_cast<double>(n));
    long steps = 0;

    std::size_t m = n - 1;
    while (m > 0) {
        // active block [ll..m], split at exact zeros of e
        double smax = std::fabs(d[m]);
        std::size_t ll = 0;
        bool found = false;
        for (std::size_t l = m; l-- > 0;) {
            smax = std::max({smax, std::fabs(d[l]), std::fabs(e[l])});
            if (e[l] == 0.0) {
                ll = l + 1;
                found = true;
                break;
            }
        }
        if (!found) ll = 0;
        if (ll == m) {
            --m;
            continue;
        }
        if (m - ll == 1) {
            double ssmin, ssmax;
            detail::singular_values_2x2(d[ll], e[ll], d[m], ssmin, ssmax);
            d[ll] = ssmax;
            d[m] = ssmin;
            e[ll] = 0.0;
            m = (m >= 2) ? m - 2 : 0;
            continue;
        }

        const bool down = std::fabs(d[ll]) >= std::fabs(d[m]);
        double sminl = 0.0;
        if (down) {
            if (std::fabs(e[m - 1]) <= tol * std::fabs(d[m])) {
                e[m - 1] = 0.0;
                continue;
            }
            double mu = std::fabs(d[ll]);
            sminl = mu;
            bool deflated = false;
            for (std::size_t l = ll; l < m; ++l) {
                if (std::fabs(e[l]) <= tol * mu) {
                    e[l] = 0.0;
                    deflated = true;
                    break;
                }
                mu = std::fabs(d[l + 1]) * (mu / (mu + std::fabs(e[l])));
                sminl = std::min(sminl, mu);
            }
            if (deflated) continue;
        } else {
            if (std::fabs(e[ll]) <= tol * std::fabs(d[ll])) {
                e[ll] = 0.0;
                continue;
            }
            double mu = std::fabs(d[m]);
            sminl = mu;
            bool deflated = false;
            for (std::size_t l = m; l-- > ll;) {
                if (std::fabs(e[l]) <= tol * mu) {
                    e[l] = 0.0;
                    deflated = true;
                    break;
                }
                mu = std::fabs(d[l]) * (mu / (mu + std::fabs(e[l])));
                sminl = std::min(sminl, mu);
            }
            if (deflated) continue;
        }

        if (steps >= budget) throw NoConvergence("bidiagonal_sv sweep budget exhausted");
        steps += 2 * static_cast<long>(m - ll);  // two rotations per position

        // shift selection: zero shift whenever relative accuracy demands it
        double shift = 0.0;
        if (static_cast<double>(n) * tol * (sminl / smax) >
            std::max(kUnitRoundoff, 0.01 * tol)) {
            double sll, dummy;
            if (down) {
                sll = std::fabs(d[ll]);
                detail::singular_values_2x2(d[m - 1], e[m - 1], d[m], shift, dummy);
            } else {
                sll = std::fabs(d[m]);
                detail::singular_values_2x2(d[ll], e[ll], d[ll + 1], shift, dummy);
            }
            if (sll > 0.0 && (shift / sll) * (shift / sll) < kUnitRoundoff) shift = 0.0;
        }
        if (shift == 0.0) {
            if (down)
                detail::zero_shift_sweep_down(d, e, ll, m);
            else
                detail::zero_shift_sweep_up(d, e, ll, m);
        } else {
            if (down)
                detail::shifted_sweep_down(d, e, ll, m, shift);
            else
                detail::shifted_sweep_up(d, e, ll, m, shift);
        }
    }

    for (double& v : d) v = std::fabs(v);
    std::stable_sort(d.begin(), d.end(), std::greater<>());
    return {std::move(d), Spectrum::Kind::singular};
}

}  // namespace tnla
