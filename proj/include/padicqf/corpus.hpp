#pragma once

#include "schwartz.hpp"

#include <random>

namespace padicqf {

// Named test functions used by the CLI and the acceptance run.
//   unit_ball    1_{Z_p^n}
//   lizorkin0    1_{pZ_p^n} - p^{-n} 1_{Z_p^n}          (in Phi)
//   shifted_box  1_{e1 + pZ_p^n}                         (in Psi)
inline std::vector<std::string> builtin_names() { return {"unit_ball", "lizorkin0", "shifted_box"}; }

inline TestFunctionE builtin_function(const std::string& name, unsigned long p, std::size_t n) {
    ExtScalar one(p, 1);
    PVector zero(n, Rational(0));
    if (name == "unit_ball") return TestFunctionE::indicator(p, Ball{zero, 0}, one);
    if (name == "lizorkin0")
        return TestFunctionE::from_terms(p, n, {{Ball{zero, -1}, one}, {Ball{zero, 0}, ExtScalar(p, -rpow(p, -static_cast<long>(n)))}});
    if (name == "shifted_box") {
        PVector e1 = zero;
        e1[0] = 1;
        return TestFunctionE::indicator(p, Ball{e1, -1}, one);
    }
    throw std::invalid_argument("unknown test function: " + name);
}

// Sum of `terms` balls of radius p^g .. p^G inside B_G(0) with small rational coefficients.
inline TestFunctionE random_ball_sum(std::mt19937_64& rng, unsigned long p, std::size_t n, int g, int G, int terms) {
    std::vector<std::pair<Ball, ExtScalar>> raw;
    std::uniform_int_distribution<int> rad(g, G);
    std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
    for (int t = 0; t < terms; ++t) {
        Ball b;
        b.gamma = rad(rng);
        std::uniform_int_distribution<long> digit(0, Cyclotomic::order(p, G - b.gamma) - 1);
        for (std::size_t i = 0; i < n; ++i) b.center.push_back(Rational(digit(rng)) * rpow(p, -G));
        Rational c = make_rational(num(rng), den(rng));
        raw.emplace_back(b, ExtScalar(p, is_zero(c) ? Rational(1) : c));
    }
    return TestFunctionE::from_terms(p, n, raw);
}

// g - (int g / vol B) 1_B with B = B_G(0): mean zero, so in Phi.
inline TestFunctionE random_phi(std::mt19937_64& rng, unsigned long p, std::size_t n, int g, int G, int terms) {
    TestFunctionE h = random_ball_sum(rng, p, n, g, G, terms);
    Ball B{PVector(n, Rational(0)), G};
    return h - TestFunctionE::indicator(p, B, h.integral() * ExtScalar(p, 1 / B.volume(p)));
}

// g - g(0) 1_{B_g(0)}: vanishes at 0, so in Psi.
inline TestFunctionE random_psi(std::mt19937_64& rng, unsigned long p, std::size_t n, int g, int G, int terms) {
    TestFunctionE h = random_ball_sum(rng, p, n, g, G, terms);
    return h - TestFunctionE::indicator(p, Ball{PVector(n, Rational(0)), g}, h.eval(PVector(n, Rational(0))));
}

}  // namespace padicqf
