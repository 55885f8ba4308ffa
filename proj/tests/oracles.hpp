#pragma once

// Brute-force and series oracles shared by the unit tests and the acceptance run.
#include <padicqf/quadform.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace padicqf::oracles {

// (a,b)_p = 1 iff z^2 = a x^2 + b y^2 has a primitive solution. For coefficients of order
// <= 1 any primitive solution has a gradient entry of order <= 1, so a solution mod p^3
// with such a gradient lifts by Hensel.
inline int hilbert_bruteforce(long a, long b, long p) {
    long m = p * p * p;
    auto ord = [&](long v) {
        v %= m;
        if (v < 0) v += m;
        if (v == 0) return 3;
        int k = 0;
        while (v % p == 0) v /= p, ++k;
        return k;
    };
    std::vector<std::vector<long>> roots(static_cast<std::size_t>(m));
    for (long z = 0; z < m; ++z) roots[static_cast<std::size_t>(z * z % m)].push_back(z);
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long r = ((a * x % m * x + b * y % m * y) % m + m) % m;
            for (long z : roots[static_cast<std::size_t>(r)]) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                if (std::min({ord(a * x), ord(b * y), ord(z)}) <= 1) return 1;
            }
        }
    return -1;
}

// Truncated Tate integrals for an unramified character pi(p^k u) = c^k:
// rho = [int_{Z_p} pi |x|^{s-1}] / [int_{Z_p} pi^{-1} |x|^{-s}] with phi = phihat = 1_{Z_p}.
inline double rho_unramified_series(double p, double c, double s) {
    double lhs = 0, rhs = 0;
    for (int k = 0; k < 400; ++k) {
        lhs += std::pow(c, k) * std::pow(p, -k * s);
        rhs += std::pow(c, k) * std::pow(p, k * (s - 1));
    }
    return lhs / rhs;
}

}  // namespace padicqf::oracles
