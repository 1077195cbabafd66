#include <catch2/catch_amalgamated.hpp>

#include <cfloat>

#include "tnla/expand.hpp"
#include "tnla/generators.hpp"
#include "tnla/neville.hpp"
#include "tnla/oracle.hpp"

#include "fixtures.hpp"

using namespace tnla;
using namespace fixtures;

TEST_CASE("tn_expand reproduces the Durer matrix exactly") {
    const DenseMatrix a = tn_expand(durer_grid());
    const DenseMatrix expected = durer_dense();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(a(i, j) == expected(i, j));
}

TEST_CASE("tn_expand of the identity grid is the identity") {
    REQUIRE(tn_expand(BdMatrix::identity(5)) == DenseMatrix::identity(5));
}

TEST_CASE("tn_expand reproduces the Vandermonde(2,3,5,8) matrix exactly") {
    REQUIRE(tn_expand(vandermonde_2358_grid()) == vandermonde_2358_dense());
}

TEST_CASE("tn_expand rejects invalid grids") {
    BdMatrix b = BdMatrix::identity(3);
    b(1, 0) = -0.5;
    REQUIRE_THROWS_AS(tn_expand(b), InvalidBd);
    b = BdMatrix::identity(3);
    b(2, 2) = 0.0;
    REQUIRE_THROWS_AS(tn_expand(b), InvalidBd);
}

TEST_CASE("tn_expand flags overflow past the float range") {
    BdMatrix b = BdMatrix::identity(4);
    for (std::size_t j = 0; j < 4; ++j) b(j, j) = 1e308;
    for (std::size_t i = 1; i < 4; ++i) b(i, i - 1) = 10.0;
    REQUIRE_THROWS_AS(tn_expand(b), Overflow);
}

TEST_CASE("rectangular expansion is the leading block of the padded square") {
    BdMatrix wide(2, 4);
    const BdMatrix square = pascal_bd(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) wide(i, j) = square(i, j);
    const DenseMatrix full = tn_expand(square);
    const DenseMatrix block = tn_expand(wide);
    REQUIRE(block.rows() == 2);
    REQUIRE(block.cols() == 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(block(i, j) == full(i, j));
}

TEST_CASE("tn_inverse_expand on identity and Pascal order 2") {
    REQUIRE(tn_inverse_expand(BdMatrix::identity(4)) == DenseMatrix::identity(4));
    const DenseMatrix inv = tn_inverse_expand(pascal_bd(2));
    REQUIRE(inv == DenseMatrix{{2, -1}, {-1, 1}});
}

TEST_CASE("tn_inverse_expand matches the exact rational inverse of the Durer matrix") {
    const DenseMatrix inv = tn_inverse_expand(durer_grid());
    const RationalMatrix exact = exact_inverse(to_rational(durer_dense()));
    REQUIRE(max_componentwise_rel_error(inv, exact) <= 1e-15);
}

TEST_CASE("inverse carries the checkerboard sign pattern") {
    for (auto seed : {1u, 2u, 3u}) {
        const BdMatrix b = random_tn_bd(8, seed, 0.1, 10.0);
        const DenseMatrix inv = tn_inverse_expand(b);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const double signed_entry = ((i + j) % 2 == 0) ? inv(i, j) : -inv(i, j);
                REQUIRE(signed_entry >= 0.0);
            }
    }
}

TEST_CASE("tn_solve basics") {
    const Vector b{0.25, -3.0, 7.5};
    REQUIRE(tn_solve(BdMatrix::identity(3), b) == b);

    const BdMatrix pascal2 = pascal_bd(2);
    const Vector x = tn_solve(pascal2, Vector{1.0, -1.0});
    REQUIRE(x[0] == 3.0);
    REQUIRE(x[1] == -2.0);

    REQUIRE_THROWS_AS(tn_solve(pascal2, Vector{1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST_CASE("tn_solve on Hilbert(7) with the alternating rhs reaches the oracle") {
    const Vector x = tn_solve(hilbert_bd(7), alternating_f7());
    const RationalVector ref = exact_solve(hilbert_exact(7), alternating_f7_exact());
    REQUIRE(rel_euclidean_error(x, ref) <= 5e-15);
}

TEST_CASE("tn_solve transpose uses BD(A^T)") {
    const BdMatrix b = vandermonde_bd(Vector{1, 2, 3, 4});
    const DenseMatrix a = tn_expand(b);
    const Vector rhs{1.0, -2.0, 3.0, -4.0};
    const Vector xt = tn_solve(b, rhs, /*transpose=*/true);
    // A^T xt must equal rhs
    const Vector back = matvec(a.transposed(), xt);
    for (std::size_t i = 0; i < 4; ++i) REQUIRE_THAT(
        back[i], Catch::Matchers::WithinRel(rhs[i], 1e-12));
}

TEST_CASE("tn_determinant") {
    REQUIRE(tn_determinant(BdMatrix::identity(6)).value == 1.0);
    REQUIRE(tn_determinant(vandermonde_2358_grid()).value == 540.0);
    const auto det3 = tn_determinant(hilbert_bd(3));
    REQUIRE_THAT(det3.value, Catch::Matchers::WithinRel(1.0 / 2160.0, 1e-14));
    REQUIRE(!det3.overflowed);
    REQUIRE(!det3.underflowed);
}

TEST_CASE("tn_determinant flags leaving the normal range") {
    BdMatrix big = BdMatrix::identity(3);
    big(0, 0) = 1e200;
    big(1, 1) = 1e200;
    REQUIRE(tn_determinant(big).overflowed);
    BdMatrix small = BdMatrix::identity(3);
    small(0, 0) = 1e-200;
    small(1, 1) = 1e-200;
    const auto r = tn_determinant(small);
    REQUIRE(r.underflowed);
    REQUIRE(!r.overflowed);
}

TEST_CASE("neville_bd recovers the Durer grid from the printed expansion") {
    // exact elimination first: the (1,3) entry of the recovered grid is 2
    const BdGrid<Rational> exact = exact_neville_bd(to_rational(durer_dense()));
    REQUIRE(exact(0, 2) == 2);
    const BdMatrix expected = durer_grid();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            REQUIRE(to_double(exact(i, j)) == expected(i, j));

    const BdMatrix b = neville_bd(durer_dense());
    REQUIRE(max_componentwise_rel_error(b, expected) <= 1e-13);
}

TEST_CASE("neville_bd recovers the printed Vandermonde grid") {
    const BdMatrix b = neville_bd(vandermonde_2358_dense());
    REQUIRE(max_componentwise_rel_error(b, vandermonde_2358_grid()) <= 1e-14);
}

TEST_CASE("neville_bd rejects matrices needing row exchanges") {
    REQUIRE_THROWS_AS(neville_bd(DenseMatrix{{0, 1}, {1, 0}}), NotTotallyNonnegative);
    // singular: the second pivot vanishes
    const DenseMatrix singular{{1, 1, 0}, {1, 1, 0}, {1, 1, 1}};
    REQUIRE_THROWS_AS(neville_bd(singular), NotTotallyNonnegative);
}

TEST_CASE("neville_bd tolerates zeros under zero pivots") {
    const DenseMatrix diag{{2, 0}, {0, 3}};
    const BdMatrix b = neville_bd(diag);
    REQUIRE(b == BdMatrix{{2, 0}, {0, 3}});
}

TEST_CASE("bd_transpose") {
    REQUIRE(bd_transpose(BdMatrix::identity(3)) == BdMatrix::identity(3));
    const BdMatrix h3 = hilbert_bd(3);
    REQUIRE(bd_transpose(h3) == h3);  // Hilbert grids are symmetric
    const BdMatrix vt = bd_transpose(vandermonde_2358_grid());
    REQUIRE(vt(0, 1) == 1.0);
    REQUIRE(vt(1, 0) == 2.0);
    REQUIRE(vt(3, 2) == 5.0);
    REQUIRE(vt(2, 3) == 2.5);
}

TEST_CASE("round trip: neville_bd after tn_expand recovers random grids") {
    // Neville is not HRA; the 1e-8 round-trip bound holds on grids of
    // moderate dynamic range ([0.5, 2] here; with entries spanning
    // [0.1, 10] the elimination loses up to six more digits by n = 10)
    for (unsigned seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const BdMatrix b = random_positive_grid(n, 1000 + seed, 0.5, 2.0);
        const BdMatrix back = neville_bd(tn_expand(b));
        REQUIRE(max_componentwise_rel_error(back, b) <= 1e-8);
    }
    // random_tn_bd off-diagonals may sit near zero, where only the mixed
    // absolute/relative measure is meaningful
    for (unsigned seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const BdMatrix b = random_tn_bd(n, 1100 + seed, 0.5, 2.0);
        const BdMatrix back = neville_bd(tn_expand(b));
        REQUIRE(max_mixed_error(back, b) <= 1e-8);
    }
}

TEST_CASE("round trip is exact in rational arithmetic") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const BdMatrix b = random_tn_bd(n, 2000 + seed, 0.1, 10.0);
        // embed the binary64 grid exactly into rationals
        RationalMatrix grid(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) grid(i, j) = Rational(b(i, j));
        const BdGrid<Rational> exact(grid);
        const BdGrid<Rational> back = exact_neville_bd(tn_expand(exact));
        REQUIRE(back == exact);
    }
}

TEST_CASE("transpose coherence of neville_bd") {
    for (unsigned seed = 0; seed < 6; ++seed) {
        const std::size_t n = 3 + seed;
        const BdMatrix b = random_positive_grid(n, 3000 + seed, 0.5, 2.0);
        const DenseMatrix a = tn_expand(b);
        const BdMatrix left = neville_bd(a.transposed());
        const BdMatrix right = bd_transpose(neville_bd(a));
        REQUIRE(max_componentwise_rel_error(left, right) <= 1e-8);
    }
}

TEST_CASE("determinant agrees with the exact rational determinant") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        const std::size_t n = 2 + seed % 6;
        const BdMatrix b = random_tn_bd(n, 4000 + seed, 0.1, 10.0);
        RationalMatrix grid(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) grid(i, j) = Rational(b(i, j));
        const Rational exact = tn_determinant_value(BdGrid<Rational>(grid));
        const double det = tn_determinant(b).value;
        REQUIRE_THAT(det, Catch::Matchers::WithinRel(to_double(exact), 1e-13));
    }
}

TEST_CASE("solve and inverse-expand are consistent") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        const std::size_t n = 2 + seed;
        const BdMatrix b = random_tn_bd(n, 5000 + seed, 0.1, 10.0);
        Vector rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = (i % 2 == 0) ? 1.0 + i : -2.0 + i * 0.5;
        const Vector x = tn_solve(b, rhs);
        const Vector y = matvec(tn_inverse_expand(b), rhs);
        double diff = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diff = std::max(diff, std::fabs(x[i] - y[i]));
            norm = std::max(norm, std::fabs(x[i]));
        }
        REQUIRE(diff <= 1e-12 * norm);
    }
}

TEST_CASE("alternating rhs solves carry high relative accuracy") {
    // componentwise relative error vs the rational oracle <= 50 n^2 ulp
    struct Case {
        BdMatrix b;
        RationalMatrix a;
    };
    std::vector<Case> cases;
    cases.push_back({hilbert_bd(6), hilbert_exact(6)});
    cases.push_back({vandermonde_bd(Vector{1, 2, 3, 4, 5, 6}),
                     to_rational(vandermonde_dense(Vector{1, 2, 3, 4, 5, 6}))});
    for (const auto& c : cases) {
        const std::size_t n = c.b.rows();
        Vector f(n);
        RationalVector fr(n);
        for (std::size_t i = 0; i < n; ++i) {
            f[i] = ((i % 2 == 0) ? 1.0 : -1.0) / static_cast<double>(21 + 2 * i);
            fr[i] = Rational(f[i]);
        }
        const Vector x = tn_solve(c.b, f);
        const RationalVector ref = exact_solve(c.a, fr);
        const double bound = 50.0 * static_cast<double>(n * n) * DBL_EPSILON;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = to_double(ref[i]);
            REQUIRE(std::fabs(x[i] - r) <= bound * std::fabs(r));
        }
    }
}
