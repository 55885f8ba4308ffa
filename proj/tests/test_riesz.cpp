#include "test_support.hpp"

#include <padicqf/corpus.hpp>
#include <padicqf/riesz.hpp>

#include <gtest/gtest.h>

using namespace padicqf;

namespace {

std::vector<RieszKernel> kernels(unsigned long p) {
    return {RieszKernel::quaternary(p), RieszKernel::binary(p, SquareClass::eps()), RieszKernel::binary(p, SquareClass::p())};
}

// Random members of Phi / Psi small enough for n = 4.
TestFunctionE sample_phi(std::mt19937_64& rng, const RieszKernel& K) {
    return K.dim() == 4 ? random_phi(rng, K.prime(), 4, -1, 0, 3) : random_phi(rng, K.prime(), 2, -2, 0, 4);
}

TestFunctionE sample_psi(std::mt19937_64& rng, const RieszKernel& K) {
    return K.dim() == 4 ? random_psi(rng, K.prime(), 4, -1, 0, 3) : random_psi(rng, K.prime(), 2, -2, 0, 4);
}

ExtScalar ext(unsigned long p, const Rational& q) { return ExtScalar(p, q); }

}  // namespace

TEST(RieszKernel, FamiliesAndDualForms) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        Rational a(static_cast<long>(smallest_nonresidue(p))), P(static_cast<long>(p));
        auto K = RieszKernel::quaternary(p);
        EXPECT_EQ(K.family(), KernelFamily::Quaternary);
        EXPECT_EQ(K.dual_form(), QuadraticForm(p, {a * P, -P, -a, Rational(1)}));
        auto B = RieszKernel::binary(p, SquareClass::p());
        EXPECT_EQ(B.family(), KernelFamily::BinaryRamified);
        EXPECT_EQ(B.dual_form(), QuadraticForm(p, {P, Rational(-1)}));
        EXPECT_EQ(RieszKernel::binary(p, SquareClass::eps()).family(), KernelFamily::BinaryUnramified);
    }
    EXPECT_THROW(RieszKernel(QuadraticForm(5, {Rational(1), Rational(1), Rational(1)})), unsupported_input);
}

TEST(RieszKernel, UnitBallPairingAndLogConstant) {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (const auto& K : kernels(p)) {
            auto unit = builtin_function("unit_ball", p, K.dim());
            EXPECT_EQ(riesz_pair(K, unit), K.unit_ball_pairing());
        }
        auto ks = kernels(p);
        EXPECT_EQ(ks[0].log_constant(), ext(p, 1 - rpow(p, -2)));
        EXPECT_EQ(ks[1].log_constant(), ext(p, (1 - rpow(p, -2)) / 2));
        EXPECT_EQ(ks[2].log_constant(), ext(p, 1 - rpow(p, -1)));
    }
}

TEST(RieszPair, ContinuationPathsAgree) {
    std::mt19937_64 rng(41);
    for (unsigned long p : {3ul, 5ul}) {
        for (const auto& K : kernels(p)) {
            for (int it = 0; it < 3; ++it) {
                auto phi = testkit::random_test_function(rng, p, K.dim(), -1, K.dim() == 4 ? 0 : 1, 3);
                auto pos = riesz_pair(K, phi);
                EXPECT_EQ(pos, riesz_pair_split(K, phi));
                EXPECT_EQ(riesz_pair_negative(K, phi), pos.substitute(ExtScalar(p, 1), -1));
            }
        }
    }
}

TEST(RieszPair, DeltaAtZeroExponent) {
    std::mt19937_64 rng(40);
    for (unsigned long p : {3ul, 5ul}) {
        for (const auto& K : kernels(p)) {
            for (const auto& name : builtin_names()) {
                auto phi = builtin_function(name, p, K.dim());
                EXPECT_EQ(delta_limit(K, phi), value_at_origin(phi)) << name;
            }
            for (int it = 0; it < 6; ++it) {
                auto phi = testkit::random_test_function(rng, p, K.dim(), -1, K.dim() == 4 ? 0 : 1, 3, it % 2);
                EXPECT_EQ(delta_limit(K, phi), value_at_origin(phi));
            }
        }
    }
}

TEST(RieszPair, FourierRelationOnPsi) {
    std::mt19937_64 rng(42);
    for (unsigned long p : {3ul, 5ul}) {
        for (const auto& K : kernels(p)) {
            for (int it = 0; it < 3; ++it) {
                auto rel = kernel_fourier_check(K, sample_psi(rng, K));
                EXPECT_TRUE(rel.positive) << p;
                EXPECT_TRUE(rel.negative) << p;
            }
            auto rel = kernel_fourier_check(K, builtin_function("shifted_box", p, K.dim()));
            EXPECT_TRUE(rel.positive && rel.negative);
            EXPECT_THROW(kernel_fourier_check(K, builtin_function("unit_ball", p, K.dim())), not_lizorkin);
        }
    }
}

TEST(LogKernel, LimitAndFourierSide) {
    std::mt19937_64 rng(43);
    for (unsigned long p : {3ul, 5ul}) {
        for (const auto& K : kernels(p)) {
            ExtScalar T(p, rpow(p, static_cast<long>(K.dim() / 2)));
            for (int it = 0; it < 3; ++it) {
                auto phi = it == 0 ? builtin_function("lizorkin0", p, K.dim()) : sample_phi(rng, K);
                EXPECT_EQ(log_kernel_pair(K, phi), riesz_pair(K, phi).value_after_cancellation(K.log_point()));
                auto psi = sample_psi(rng, K);
                EXPECT_EQ(log_kernel_pair(K, fourier(psi)), K.dual_engine().zeta(psi, SquareClass::one(), Exponent::Plain).eval(T));
            }
            EXPECT_THROW(log_kernel_pair(K, builtin_function("unit_ball", p, K.dim())), not_lizorkin);
        }
    }
}

std::vector<PVector> probe_points(const TestFunctionL& g, std::size_t n, unsigned long p) {
    std::vector<PVector> xs;
    for (const auto& [k, c] : g.terms()) {
        xs.push_back(k);
        if (xs.size() == 4) break;
    }
    PVector far(n, Rational(0));
    far[0] = rpow(p, -3);
    xs.push_back(far);
    xs.emplace_back(n, Rational(0));
    return xs;
}

TEST(RieszConvolve, MatchesPointwisePairings) {
    std::mt19937_64 rng(44);
    for (unsigned long p : {3ul, 5ul}) {
        ExtScalar one(p, 1);
        for (const auto& K : kernels(p)) {
            auto phi = K.dim() == 4 ? builtin_function("lizorkin0", p, 4) : sample_phi(rng, K);
            auto pos = riesz_convolve(K, phi, +1);
            auto neg = riesz_convolve(K, phi, -1);
            EXPECT_TRUE(lizorkin_check(evaluate_at(pos, ExtScalar(p, rpow(p, -1))), LizorkinSpace::Phi));
            for (const auto& x : probe_points(pos, K.dim(), p)) {
                EXPECT_EQ(RationalFunctionT(pos.eval(x)), convolve_pointwise(K, phi, x));
                EXPECT_EQ(RationalFunctionT(neg.eval(x)), hypersingular_pointwise(K, phi, x));
                EXPECT_EQ(neg.eval(x), pos.eval(x).substitute(one, -1));
            }
            for (long a : {-1l, 1l, 2l}) EXPECT_EQ(riesz_convolve(K, phi, a), evaluate_at(pos, ExtScalar(p, rpow(p, -a))));
            EXPECT_THROW(riesz_convolve(K, builtin_function("unit_ball", p, K.dim()), 1l), not_lizorkin);
        }
    }
}

TEST(RieszConvolve, GroupLaw) {
    std::mt19937_64 rng(45);
    for (unsigned long p : {3ul, 5ul}) {
        for (const auto& K : kernels(p)) {
            auto phi = K.dim() == 4 ? builtin_function("lizorkin0", p, 4) : sample_phi(rng, K);
            auto rep = group_law_verify(K, phi);
            EXPECT_TRUE(rep.ok);
            EXPECT_GE(rep.cases.size(), 12u);
            // K_a * K_{-a} is the identity on Phi
            EXPECT_EQ(riesz_convolve(K, riesz_convolve(K, phi, 2l), -2l), phi);
        }
    }
}

TEST(RieszConvolve, HypersingularFloatOracle) {
    unsigned long p = 3;
    for (const auto& K : {RieszKernel::binary(p, SquareClass::eps()), RieszKernel::quaternary(p)}) {
        auto phi = builtin_function("lizorkin0", p, K.dim());
        for (double a : {1.0, 1.5}) {
            PVector x(K.dim(), Rational(0));
            auto exact = eval_float(hypersingular_pointwise(K, phi, x), std::pow(3.0, -a));
            auto approx = hypersingular_float(K, phi, x, a, 6);
            EXPECT_TRUE(testkit::close(exact, approx, 1e-6 * std::max(1.0, std::abs(exact)))) << exact << " " << approx;
        }
    }
}
