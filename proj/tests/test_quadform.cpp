#include "oracles.hpp"
#include "test_support.hpp"

#include <padicqf/quadform.hpp>

#include <gtest/gtest.h>

using namespace padicqf;
using padicqf::testkit::close;
using padicqf::oracles::hilbert_bruteforce;
using padicqf::oracles::rho_unramified_series;

namespace {

std::complex<double> to_c(const ExtScalar& x) { return x.to_complex(); }

}  // namespace

TEST(Symbols, LegendreAndSquareClasses) {
    EXPECT_EQ(legendre(3, 5), -1);
    EXPECT_EQ(legendre(4, 5), 1);
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(smallest_nonresidue(7), 3ul);
    EXPECT_THROW(legendre(10, 5), std::invalid_argument);
    EXPECT_EQ(square_class(Rational(15), 5), SquareClass::eps_p());
    EXPECT_EQ(square_class(make_rational(4, 25), 5), SquareClass::one());
    EXPECT_EQ(square_class(Rational(-1), 3), SquareClass::eps());
    EXPECT_EQ(SquareClass::parse("epsp"), SquareClass::eps_p());
}

TEST(Symbols, HilbertMatchesSolvabilityOracle) {
    for (long p : {3l, 5l, 7l}) {
        for (auto a : SquareClass::all())
            for (auto b : SquareClass::all()) {
                long ra = a.representative(p).get_num().get_si(), rb = b.representative(p).get_num().get_si();
                EXPECT_EQ(hilbert(a, b, p), hilbert_bruteforce(ra, rb, p)) << p << " " << a.name() << " " << b.name();
            }
    }
}

TEST(Symbols, HilbertProperties) {
    std::mt19937_64 rng(4);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        for (int it = 0; it < 60; ++it) {
            Rational a = testkit::small_rational(rng, 50), b = testkit::small_rational(rng, 50), c = testkit::small_rational(rng, 50);
            if (is_zero(a) || is_zero(b) || is_zero(c)) continue;
            EXPECT_EQ(hilbert(a, b, p), hilbert(b, a, p));
            EXPECT_EQ(hilbert(a, b * c, p), hilbert(a, b, p) * hilbert(a, c, p));
            EXPECT_EQ(hilbert(a, -a, p), 1);
            if (!is_zero(Rational(1) - a)) EXPECT_EQ(hilbert(a, 1 - a, p), 1);
        }
        EXPECT_EQ(pi_beta(SquareClass::eps(), Rational(static_cast<long>(p * p * p)), p), -1);
        EXPECT_EQ(pi_beta(SquareClass::eps(), Rational(static_cast<long>(p * p)), p), 1);
    }
}

TEST(WeilConstant, ValuesAndOracle) {
    EXPECT_EQ(weil_gamma(Rational(2), 5), ExtScalar(5, 1));
    EXPECT_EQ(weil_gamma(Rational(15), 5), ExtScalar(5, -1));
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (auto c : SquareClass::all()) {
            for (long scale : {1l, static_cast<long>(p * p)}) {
                Rational alpha = c.representative(p) * scale;
                auto g = weil_gamma(alpha, p);
                EXPECT_NEAR(std::abs(to_c(g)), 1.0, 1e-9);
                for (int depth : {1, 2, 3}) EXPECT_TRUE(close(weil_gamma_oracle(alpha, p, depth), to_c(g), 1e-6)) << p << c.name();
            }
        }
    }
}

TEST(WeilConstant, MultiplicativeIdentities) {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        for (auto c : SquareClass::all()) {
            Rational a = c.representative(p);
            EXPECT_EQ(weil_gamma(-a, p) * weil_gamma(a, p), ExtScalar(p, 1));
            for (auto d : SquareClass::all()) {
                Rational b = d.representative(p);
                QuadraticForm h(p, {Rational(1), -a, -b, a * b});
                EXPECT_EQ(weil_gamma_form(h), ExtScalar(p, hilbert(a, b, p)));
            }
        }
    }
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> coef(1, 60), sgn(0, 1);
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (int it = 0; it < 20; ++it) {
            std::size_t n = it % 2 ? 4 : 2;
            std::vector<Rational> c;
            while (c.size() < n) {
                long v = coef(rng) * (sgn(rng) ? 1 : -1);
                if (v % static_cast<long>(p * p) != 0) c.emplace_back(v);
            }
            QuadraticForm f(p, c);
            auto inv = form_invariants(f);
            for (auto t : SquareClass::all())
                EXPECT_EQ(weil_gamma_form(f.scaled(t.representative(p))),
                          inv.weil_gamma * Rational(hilbert(*inv.d_star_class, t, p)));
        }
    }
}

TEST(WeilConstant, QuaternaryInvariants) {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        auto f = QuadraticForm::quaternary(p);
        auto inv = form_invariants(f);
        EXPECT_EQ(inv.discriminant_class, SquareClass::one());
        EXPECT_EQ(*inv.d_star_class, SquareClass::one());
        EXPECT_EQ(inv.weil_gamma, ExtScalar(p, -1));
        EXPECT_TRUE(quaternary_parameter(f).has_value());
        EXPECT_EQ(f.dual().dual(), f);
    }
    auto f = QuadraticForm::parse(5, "1,-2,-5,10");
    EXPECT_EQ(f, QuadraticForm::quaternary(5));
    EXPECT_EQ(f({Rational(1), Rational(1), Rational(1), Rational(1)}), Rational(4));
    EXPECT_THROW(QuadraticForm::parse(2, "1,1"), unsupported_input);
    EXPECT_THROW(QuadraticForm::parse(5, "1,0"), std::invalid_argument);
}

TEST(RhoFactor, UnramifiedFormulas) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        ExtScalar one(p, 1);
        Rational ip = rpow(p, -1);
        RationalFunctionT r1(LaurentT(one) - LaurentT::monomial(ExtScalar(p, ip), -1), LaurentT(one) - LaurentT::monomial(one, 1));
        RationalFunctionT re(LaurentT(one) + LaurentT::monomial(ExtScalar(p, ip), -1), LaurentT(one) + LaurentT::monomial(one, 1));
        EXPECT_EQ(rho_factor(SquareClass::one(), p), r1);
        EXPECT_EQ(rho_factor(SquareClass::eps(), p), re);
        for (double s : {0.2, 0.45, 0.8}) {
            ExtScalar t(p, Rational(std::pow(double(p), -s)));
            EXPECT_NEAR(rho_factor(SquareClass::one(), p).eval(t).to_complex().real(), rho_unramified_series(p, 1, s), 1e-9);
            EXPECT_NEAR(rho_factor(SquareClass::eps(), p).eval(t).to_complex().real(), rho_unramified_series(p, -1, s), 1e-9);
        }
    }
}

TEST(RhoFactor, RamifiedSignStableAcrossDepths) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (auto eta : {SquareClass::p(), SquareClass::eps_p()}) {
            int ref = rho_ramified_sign(p, eta);
            for (int depth : {6, 7, 8}) {
                auto r = rho_ramified_ratio(p, eta, depth);
                EXPECT_NEAR(r.real(), ref, 1e-6) << p << eta.name() << depth;
                EXPECT_NEAR(r.imag(), 0.0, 1e-6);
            }
            // rho(pi_eta, s) = sign sigma_p p^{s-1/2}
            double s = 0.3;
            ExtScalar t(p, Rational(std::pow(double(p), -s)));
            std::complex<double> sigma = ExtScalar::sigma(p).to_complex();
            EXPECT_TRUE(close(rho_factor(eta, p).eval(t).to_complex(), double(ref) * sigma * std::pow(double(p), s - 0.5), 1e-9));
        }
    }
}

TEST(RhoFactor, TableMatchesOracle) {
    for (const auto& row : kRhoSignTable) {
        if (row.prime > 7) continue;
        EXPECT_EQ(rho_sign_from_oracle(row.prime, SquareClass::p(), 6), row.sign_p);
        EXPECT_EQ(rho_sign_from_oracle(row.prime, SquareClass::eps_p(), 6), row.sign_eps_p);
    }
}
