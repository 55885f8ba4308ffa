#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace padicqf;

namespace {

Ball origin_ball(std::size_t n, int g) { return Ball{PVector(n, Rational(0)), g}; }

// F[1_{a+B_g}](xi) = chi(-a.xi) p^{gn} 1_{||xi|| <= p^{-g}}, summed term by term.
ExtScalar fourier_closed_form(const TestFunctionE& phi, const PVector& xi) {
    unsigned long p = phi.prime();
    ExtScalar s(p, 0);
    Rational vol = rpow(p, phi.gamma() * static_cast<long>(phi.dim()));
    if (v_order(xi, p) < phi.gamma()) return s;
    for (const auto& [a, c] : phi.terms()) {
        Rational dot = 0;
        for (std::size_t i = 0; i < xi.size(); ++i) dot += a[i] * xi[i];
        s += c * ExtScalar(char_value(-dot, p)) * vol;
    }
    return s;
}

PVector random_point(std::mt19937_64& rng, unsigned long p, std::size_t n, int lo_ord) {
    std::uniform_int_distribution<long> d(0, 200);
    PVector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(Rational(d(rng)) * rpow(p, lo_ord));
    return x;
}

}  // namespace

TEST(TestFunction, CanonicalRefinement) {
    unsigned long p = 3;
    ExtScalar one(p, 1);
    auto unit = TestFunctionE::indicator(p, origin_ball(1, 0), one);
    TestFunctionE parts(p, 1, -1);
    for (long c = 0; c < 3; ++c) parts.add_ball(Ball{{Rational(c)}, -1}, one);
    EXPECT_EQ(unit, parts);
    EXPECT_EQ(parts.coarsened().gamma(), 0);

    auto cancel = TestFunctionE::from_terms(p, 2, {{origin_ball(2, 1), one}, {origin_ball(2, 1), -one}});
    EXPECT_TRUE(cancel.is_zero());

    auto nested = TestFunctionE::from_terms(p, 1, {{origin_ball(1, 0), one}, {origin_ball(1, -1), one}});
    EXPECT_EQ(nested.gamma(), -1);
    EXPECT_EQ(nested.size(), 3u);
    EXPECT_EQ(nested.eval({Rational(0)}), ExtScalar(p, 2));
    EXPECT_EQ(nested.eval({Rational(1)}), one);
    EXPECT_TRUE(nested.eval({make_rational(1, 3)}).is_zero());
}

TEST(TestFunction, IntegralsAndLizorkin) {
    unsigned long p = 5;
    ExtScalar one(p, 1);
    for (int g : {-2, 0, 1}) EXPECT_EQ(TestFunctionE::indicator(p, origin_ball(4, g), one).integral(), ExtScalar(p, rpow(p, 4 * g)));
    auto phi0 = TestFunctionE::from_terms(p, 4, {{origin_ball(4, -1), one}, {origin_ball(4, 0), ExtScalar(p, -rpow(p, -4))}});
    EXPECT_TRUE(phi0.integral().is_zero());
    EXPECT_TRUE(lizorkin_check(phi0, LizorkinSpace::Phi));
    EXPECT_FALSE(lizorkin_check(TestFunctionE::indicator(p, origin_ball(4, 0), one), LizorkinSpace::Phi));
    auto psi = TestFunctionE::indicator(p, Ball{{Rational(1)}, -1}, one);
    EXPECT_TRUE(lizorkin_check(psi, LizorkinSpace::Psi));
}

TEST(Fourier, BallsAndSelfDuality) {
    for (unsigned long p : {3ul, 5ul}) {
        ExtScalar one(p, 1);
        for (std::size_t n : {1ul, 2ul, 4ul}) {
            auto unit = TestFunctionE::indicator(p, origin_ball(n, 0), one);
            EXPECT_EQ(fourier(unit), unit);
        }
        auto small = TestFunctionE::indicator(p, origin_ball(4, -1), one);
        auto expect = TestFunctionE::indicator(p, origin_ball(4, 1), ExtScalar(p, rpow(p, -4)));
        EXPECT_EQ(fourier(small), expect);
    }
}

TEST(Fourier, MatchesTermwiseClosedForm) {
    std::mt19937_64 rng(7);
    for (unsigned long p : {3ul, 5ul}) {
        for (int it = 0; it < 6; ++it) {
            std::size_t n = 1 + it % 3;
            auto phi = testkit::random_test_function(rng, p, n, -1, 1, 4, it % 2);
            auto F = fourier(phi);
            for (int k = 0; k < 20; ++k) {
                PVector xi = random_point(rng, p, n, -2 + k % 3);
                EXPECT_EQ(F.eval(xi), fourier_closed_form(phi, xi));
            }
        }
    }
}

TEST(Fourier, InversionParsevalAndConvolution) {
    std::mt19937_64 rng(8);
    for (unsigned long p : {3ul, 5ul}) {
        for (int it = 0; it < 4; ++it) {
            std::size_t n = it % 2 ? 2 : 1;
            auto a = testkit::random_test_function(rng, p, n, -1, 1, 3, 1);
            auto b = testkit::random_test_function(rng, p, n, -2, 0, 3);
            auto Fa = fourier(a), Fb = fourier(b);
            PVector zero(n, Rational(0));
            EXPECT_EQ(fourier(Fa), a.reflected());
            EXPECT_EQ(inverse_fourier(Fa), a);
            EXPECT_EQ(a.integral(), Fa.eval(zero));
            EXPECT_EQ(a.eval(zero), Fa.integral());
            EXPECT_EQ(pointwise_product(a, conj(b)).integral(), pointwise_product(Fa, conj(Fb)).integral());
            auto ab = convolve(a, b);
            EXPECT_EQ(ab, convolve(b, a));
            EXPECT_EQ(fourier(ab), pointwise_product(Fa, Fb));
        }
    }
}

TEST(Convolution, UnitBallAndMollifier) {
    unsigned long p = 3;
    ExtScalar one(p, 1);
    auto unit = TestFunctionE::indicator(p, origin_ball(2, 0), one);
    EXPECT_EQ(convolve(unit, unit), unit);
    std::mt19937_64 rng(9);
    auto phi = testkit::random_test_function(rng, p, 2, -1, 1, 5);
    for (int k : {1, 2}) {
        auto delta = TestFunctionE::indicator(p, origin_ball(2, -k), ExtScalar(p, rpow(p, 2 * k)));
        EXPECT_EQ(convolve(phi, delta), phi);
    }
}
