#include "test_support.hpp"

#include <padicqf/zeta.hpp>

#include <gtest/gtest.h>

using namespace padicqf;

namespace {

Ball origin_ball(std::size_t n, int g) { return Ball{PVector(n, Rational(0)), g}; }

LaurentT mono(unsigned long p, const Rational& c, int k) { return LaurentT::monomial(ExtScalar(p, c), k); }

// (1 - p^{-2}) / (1 - t) scaled by t^{2m}
RationalFunctionT closed_form_z(unsigned long p, int m) {
    Rational q = 1 - rpow(p, -2);
    return RationalFunctionT(mono(p, q, 2 * m), mono(p, 1, 0) - mono(p, 1, 1));
}

Rational one_minus_inv(unsigned long p) { return 1 - rpow(p, -1); }

// Rows of the unit-box table keyed by the index vector.
RationalFunctionT table_row(unsigned long p, const std::vector<int>& i) {
    Rational u = one_minus_inv(p);
    int ones = i[0] + i[1] + i[2] + i[3];
    if (i[0] && i[1] && ones == 3) return RationalFunctionT(mono(p, u * rpow(p, -1), 1));
    if (i == std::vector<int>{1, 1, 0, 0}) return RationalFunctionT(mono(p, u * u, 1));
    switch (ones) {
        case 3: return RationalFunctionT(mono(p, u * rpow(p, -3), 0));
        case 2: return RationalFunctionT(mono(p, u * u * rpow(p, -2), 0));
        case 1: return RationalFunctionT(mono(p, u * u * u * rpow(p, -1), 0));
        default: return RationalFunctionT(mono(p, u * u * u * u, 0));
    }
}

double as_real(const ExtScalar& x) { return x.to_complex().real(); }

}  // namespace

TEST(Zeta, ClosedFormAndScaling) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        ZetaEngine eng(QuadraticForm::quaternary(p));
        for (int m : {0, 1, 2, 3}) {
            auto phi = TestFunctionE::indicator(p, origin_ball(4, -m), ExtScalar(p, 1));
            EXPECT_EQ(eng.zeta(phi), closed_form_z(p, m)) << p << " " << m;
        }
    }
}

TEST(Zeta, UnitBoxTable) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        ZetaEngine eng(QuadraticForm::quaternary(p));
        auto tab = unit_sphere_integral(eng);
        ASSERT_EQ(tab.rows.size(), 15u);
        for (const auto& row : tab.rows) EXPECT_EQ(row.value, table_row(p, row.index)) << p;
        Rational q = 1 - rpow(p, -2);
        EXPECT_EQ(tab.total, RationalFunctionT(mono(p, q, 0) + mono(p, q, 1)));
    }
}

TEST(Zeta, TailIntegral) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        ZetaEngine eng(QuadraticForm::quaternary(p));
        Rational q = 1 - rpow(p, -2);
        // p^{-2a}(1-p^{-2})(1+p^{a}) / (1-p^{-2a}) with t = p^{-a}
        RationalFunctionT expect(mono(p, q, 2) + mono(p, q, 1), mono(p, 1, 0) - mono(p, 1, 2));
        EXPECT_EQ(tail_integral(eng), expect);
    }
}

TEST(Zeta, OneDimensionalSquare) {
    for (unsigned long p : {3ul, 5ul}) {
        ZetaEngine eng(QuadraticForm(p, {Rational(1)}));
        auto phi = TestFunctionE::indicator(p, origin_ball(1, 0), ExtScalar(p, 1));
        auto z = eng.zeta(phi, SquareClass::one(), Exponent::Plain);
        RationalFunctionT expect(mono(p, one_minus_inv(p), 0), mono(p, 1, 0) - mono(p, rpow(p, -1), 2));
        EXPECT_EQ(z, expect);
        // geometric series at s = 1
        double s = 1.0, sum = 0;
        for (int k = 0; k < 200; ++k) sum += (1 - 1.0 / p) * std::pow(double(p), -k) * std::pow(double(p), -2.0 * k * s);
        EXPECT_NEAR(as_real(z.eval(ExtScalar(p, rpow(p, -1)))), sum, 1e-12);
        EXPECT_NEAR(zeta_oracle_float(eng.form(), phi, SquareClass::one(), Exponent::Plain, s, 8).real(), sum, 1e-9);
    }
}

TEST(Zeta, LinearityAndCharacters) {
    std::mt19937_64 rng(21);
    for (unsigned long p : {3ul, 5ul}) {
        ZetaEngine eng(QuadraticForm::quaternary(p));
        for (int it = 0; it < 4; ++it) {
            auto a = testkit::random_test_function(rng, p, 4, -1, 0, 3);
            auto b = testkit::random_test_function(rng, p, 4, -1, 0, 3);
            ExtScalar c1(p, testkit::small_rational(rng)), c2(p, testkit::small_rational(rng));
            for (auto beta : SquareClass::all()) {
                auto lhs = eng.zeta(a * c1 + b * c2, beta);
                auto rhs = eng.zeta(a, beta) * RationalFunctionT(c1) + eng.zeta(b, beta) * RationalFunctionT(c2);
                EXPECT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(Zeta, EllipticityConstants) {
    // ||x|| = 1 enumerated mod p^2: ord f(x) in {0, 1}, so |f| lies in [p^{-1}, 1] ||x||^2.
    for (long p : {3l, 5l, 7l}) {
        long a = static_cast<long>(smallest_nonresidue(p)), m = p * p;
        long c[4] = {1, -a, -p, a * p};
        long x[4] = {0, 0, 0, 0};
        bool ok = true;
        while (true) {
            if (x[0] % p || x[1] % p || x[2] % p || x[3] % p) {
                long v = 0;
                for (int i = 0; i < 4; ++i) v += c[i] * x[i] * x[i];
                ok = ok && (v % m != 0);
            }
            int i = 0;
            while (i < 4 && ++x[i] == m) x[i++] = 0;
            if (i == 4) break;
        }
        EXPECT_TRUE(ok) << p;
    }
}

TEST(Zeta, IsotropicFormIsRejected) {
    ZetaEngine eng(QuadraticForm(5, {Rational(1), Rational(-1)}), 20);
    auto phi = TestFunctionE::indicator(5, origin_ball(2, 0), ExtScalar(5, 1));
    EXPECT_THROW(eng.zeta(phi), depth_exceeded);
}

TEST(Zeta, OrdMoment) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        ZetaEngine eng(QuadraticForm::quaternary(p));
        auto unit = TestFunctionE::indicator(p, origin_ball(4, 0), ExtScalar(p, 1));
        EXPECT_EQ(eng.ord_moment(unit), ExtScalar(p, make_rational(1, long(p * p) - 1)));
        // certified ball: f = p (-x3^2 + a x4^2) with unit x4 has order 1
        Ball b{{Rational(0), Rational(0), Rational(0), Rational(1)}, -1};
        auto phi = TestFunctionE::indicator(p, b, ExtScalar(p, 3));
        EXPECT_EQ(eng.ord_moment(phi), ExtScalar(p, 3 * rpow(p, -4)));
    }
    // derivative of the float oracle at s = 0: int ord(f) = -(d/ds int |f|^s) / ln p
    unsigned long p = 3;
    ZetaEngine eng(QuadraticForm::quaternary(p));
    auto unit = TestFunctionE::indicator(p, origin_ball(4, 0), ExtScalar(p, 1));
    double h = 1e-4;
    auto zp = zeta_oracle_float(eng.form(), unit, SquareClass::one(), Exponent::Plain, h, 6);
    auto zm = zeta_oracle_float(eng.form(), unit, SquareClass::one(), Exponent::Plain, -h, 6);
    EXPECT_NEAR(-(zp - zm).real() / (2 * h) / std::log(3.0), 1.0 / 8.0, 1e-6);
}

TEST(ZetaOracle, MatchesCertified) {
    unsigned long p = 3;
    ZetaEngine eng(QuadraticForm::quaternary(p));
    auto unit = TestFunctionE::indicator(p, origin_ball(4, 0), ExtScalar(p, 1));
    double s = 3.0;
    ExtScalar t(p, rpow(p, -3));
    EXPECT_NEAR(zeta_oracle_float(eng.form(), unit, SquareClass::one(), Exponent::Shifted, s, 6).real(), as_real(eng.zeta(unit).eval(t)),
                1e-5);
    for (const auto& row : unit_sphere_integral(eng).rows) {
        auto phi = unit_box_indicator(p, row.index);
        ExtScalar t2(p, rpow(p, -2));
        EXPECT_NEAR(zeta_oracle_float(eng.form(), phi, SquareClass::one(), Exponent::Shifted, 2.0, 6).real(), as_real(row.value.eval(t2)),
                    1e-6);
    }
}

TEST(ZetaOracle, RandomFunctionsAndCharacters) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> sdist(2.05, 4.95);
    for (unsigned long p : {3ul, 5ul}) {
        ZetaEngine eng(QuadraticForm::quaternary(p));
        for (int it = 0; it < 3; ++it) {
            auto phi = testkit::random_test_function(rng, p, 4, -1, 0, 3, it % 2);
            auto beta = SquareClass::all()[static_cast<std::size_t>(it)];
            auto z = eng.zeta(phi, beta);
            double s = sdist(rng);
            ExtScalar t(p, Rational(std::pow(double(p), -s)));
            auto exact = z.eval(t).to_complex();
            auto approx = zeta_oracle_float(eng.form(), phi, beta, Exponent::Shifted, s, 6);
            EXPECT_TRUE(testkit::close(exact, approx, 1e-5 * std::max(1.0, std::abs(exact))));
        }
    }
}
