#include <catch2/catch_amalgamated.hpp>

#include "tnla/expand.hpp"
#include "tnla/generators.hpp"
#include "tnla/oracle.hpp"

#include "fixtures.hpp"

using namespace tnla;
using namespace fixtures;

TEST_CASE("exact_neville_bd on the rational Hilbert matrix") {
    const BdGrid<Rational> b = exact_neville_bd(hilbert_exact(3));
    REQUIRE(b(0, 0) == 1);
    REQUIRE(b(0, 1) == Rational(1, 2));
    REQUIRE(b(0, 2) == Rational(2, 3));
    REQUIRE(b(1, 1) == Rational(1, 12));
    REQUIRE(b(1, 2) == Rational(1, 3));
    REQUIRE(b(2, 2) == Rational(1, 180));
    REQUIRE(b(2, 0) == Rational(2, 3));
    REQUIRE(b(2, 1) == Rational(1, 3));

    const RationalMatrix eye = RationalMatrix::identity(4);
    REQUIRE(exact_neville_bd(eye).grid() == eye);
}

TEST_CASE("exact_solve") {
    const RationalMatrix eye = RationalMatrix::identity(3);
    const RationalVector b{Rational(1, 3), Rational(-2, 7), Rational(5)};
    REQUIRE(exact_solve(eye, b) == b);

    // 2x2 Hilbert with b = (1, 0)
    const RationalVector x = exact_solve(hilbert_exact(2), RationalVector{1, 0});
    REQUIRE(x == RationalVector{4, -6});

    REQUIRE_THROWS_AS(
        exact_solve(RationalMatrix{{1, 2}, {2, 4}}, RationalVector{1, 1}),
        SingularMatrix);
}

TEST_CASE("exact_solve verifies by substitution") {
    const Vector nodes{1, 2, 3, 4, 5, 6, 7};
    const RationalMatrix v = to_rational(vandermonde_dense(nodes));
    const RationalVector f = alternating_f7_exact();
    const RationalVector x = exact_solve(v, f);
    // A x == b identically
    for (std::size_t i = 0; i < 7; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < 7; ++j) s += v(i, j) * x[j];
        REQUIRE(s == f[i]);
    }
}

TEST_CASE("exact_inverse") {
    const RationalMatrix eye = RationalMatrix::identity(3);
    REQUIRE(exact_inverse(eye) == eye);
    REQUIRE(exact_inverse(RationalMatrix{{1, 1}, {1, 2}}) ==
            RationalMatrix{{2, -1}, {-1, 1}});

    // A * A^{-1} == I identically
    const RationalMatrix a = hilbert_exact(5);
    const RationalMatrix inv = exact_inverse(a);
    REQUIRE(matmul(a, inv) == RationalMatrix::identity(5));
}

TEST_CASE("hp_spectrum on closed-form cases") {
    const std::vector<BigFloat> sv =
        hp_spectrum(DenseMatrix{{3, 0}, {0, 4}}, SpectrumKind::singular, 128);
    REQUIRE(static_cast<double>(sv[0]) == 4.0);
    REQUIRE(static_cast<double>(sv[1]) == 3.0);

    const std::vector<BigFloat> ev =
        hp_spectrum(DenseMatrix{{1, 1}, {1, 2}}, SpectrumKind::eigen_sym, 128);
    PrecisionScope scope(512);
    const BigFloat s5 = sqrt(BigFloat(5));
    const BigFloat hi = (3 + s5) / 2, lo = (3 - s5) / 2;
    REQUIRE(abs(BigFloat(ev[0] - hi)) <= hi * pow(BigFloat(10), -30));
    REQUIRE(abs(BigFloat(ev[1] - lo)) <= lo * pow(BigFloat(10), -30));
}

TEST_CASE("hp_spectrum is monotone-stable across precision doublings") {
    const DenseMatrix h = hilbert_dense(6);
    const std::vector<BigFloat> a = hp_spectrum(h, SpectrumKind::eigen_sym, 128);
    const std::vector<BigFloat> b = hp_spectrum(h, SpectrumKind::eigen_sym, 256);
    PrecisionScope scope(1024);
    for (std::size_t i = 0; i < a.size(); ++i)
        REQUIRE(abs(BigFloat(a[i] - b[i])) <= abs(b[i]) * pow(BigFloat(10), -30));
}

TEST_CASE("hp_spectrum accepts exact rational input") {
    // lambda_min of the exact Hilbert(10): the reference for the accuracy
    // experiments; sanity-check the known leading digits
    const std::vector<BigFloat> ev = hp_spectrum(hilbert_exact(10), SpectrumKind::eigen_sym, 256);
    const double lmin = static_cast<double>(ev.back());
    REQUIRE(lmin > 1.0e-13);
    REQUIRE(lmin < 1.2e-13);
    const double lmax = static_cast<double>(ev.front());
    REQUIRE_THAT(lmax / lmin, Catch::Matchers::WithinRel(1.6e13, 0.05));
}

TEST_CASE("hp_spectrum rejects asymmetric eigen input") {
    REQUIRE_THROWS_AS(hp_spectrum(DenseMatrix{{1, 2}, {3, 4}}, SpectrumKind::eigen_sym, 128),
                      NotSymmetric);
}

TEST_CASE("hp_spectrum throws once doubling twice cannot stabilize") {
    // lambda_min(Hilbert(25)) ~ 1e-38: meaningless at 64 and 128 bits, so
    // the p / 2p / 4p ladder starting at 64 bits cannot reach 30 agreeing
    // digits
    REQUIRE_THROWS_AS(hp_spectrum(hilbert_exact(25), SpectrumKind::eigen_sym, 64),
                      PrecisionNotReached);
}

TEST_CASE("PrecisionScope restores the ambient default") {
    const unsigned before = BigFloat::default_precision();
    {
        PrecisionScope scope(512);
        REQUIRE(BigFloat::default_precision() == PrecisionScope::digits10(512));
    }
    REQUIRE(BigFloat::default_precision() == before);
}
