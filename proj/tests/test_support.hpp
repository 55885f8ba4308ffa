#pragma once

#include <padicqf/schwartz.hpp>

#include <complex>
#include <random>

namespace padicqf::testkit {

inline Rational small_rational(std::mt19937_64& rng, int span = 7) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return make_rational(num(rng), den(rng));
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, unsigned long p, int level) {
    std::vector<Rational> c(Cyclotomic::basis_size(p, level));
    std::uniform_int_distribution<int> coin(0, 2);
    for (auto& x : c)
        if (coin(rng) == 0) x = small_rational(rng);
    return Cyclotomic::from_basis(p, level, std::move(c));
}

inline ExtScalar random_ext(std::mt19937_64& rng, unsigned long p, int level) {
    ExtScalar a(random_cyclotomic(rng, p, level));
    if (ExtScalar::sigma_is_imaginary(p)) a = a + ExtScalar(random_cyclotomic(rng, p, level)) * ExtScalar::sigma(p);
    return a;
}

// Random ball sum with balls of radius between p^g and p^G inside B_G(0).
inline TestFunctionE random_test_function(std::mt19937_64& rng, unsigned long p, std::size_t n, int g, int G,
                                          int terms, int coeff_level = 0) {
    std::vector<std::pair<Ball, ExtScalar>> raw;
    std::uniform_int_distribution<int> rad(g, G);
    for (int t = 0; t < terms; ++t) {
        Ball b;
        b.gamma = rad(rng);
        std::uniform_int_distribution<long> digit(0, Cyclotomic::order(p, G - b.gamma) - 1);
        for (std::size_t i = 0; i < n; ++i) b.center.push_back(Rational(digit(rng)) * rpow(p, -G));
        ExtScalar c = coeff_level == 0 ? ExtScalar(p, small_rational(rng)) : random_ext(rng, p, coeff_level);
        if (c.is_zero()) c = ExtScalar(p, 1);
        raw.emplace_back(b, c);
    }
    return TestFunctionE::from_terms(p, n, raw);
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace padicqf::testkit
