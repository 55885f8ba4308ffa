#pragma once

#include "cyclotomic.hpp"

#include <algorithm>
#include <vector>

namespace padicqf {

inline int p_order(const Integer& z, unsigned long p) {
    if (z == 0) return kOrdInfinity;
    if (mpz_divisible_ui_p(z.get_mpz_t(), p) == 0) return 0;
    Integer rest;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), Integer(p).get_mpz_t()));
}

inline int p_order(const Rational& x, unsigned long p) {
    if (is_zero(x)) return kOrdInfinity;
    return p_order(x.get_num(), p) - p_order(x.get_den(), p);
}

inline Rational p_norm(const Rational& x, unsigned long p) {
    if (is_zero(x)) return 0;
    return rpow(p, -p_order(x, p));
}

using PVector = std::vector<Rational>;

inline int v_order(const PVector& v, unsigned long p) {
    int m = kOrdInfinity;
    for (const auto& x : v) m = std::min(m, p_order(x, p));
    return m;
}

inline Rational v_norm(const PVector& v, unsigned long p) {
    int m = v_order(v, p);
    return m == kOrdInfinity ? Rational(0) : rpow(p, -m);
}

// x = p^ord * u; returns u mod p in [1, p-1].
inline unsigned long unit_residue(const Rational& x, unsigned long p) {
    if (is_zero(x)) throw std::invalid_argument("unit part of zero");
    Integer num = x.get_num(), den = x.get_den(), P(p);
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    Integer dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    Integer r = num * dinv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
    return r.get_ui();
}

// Residue of x in Z/p^k; x must lie in Z_p.
inline Integer residue(const Rational& x, unsigned long p, int k) {
    if (p_order(x, p) < 0) throw std::invalid_argument("residue of a non-integral p-adic number");
    Integer m = ipow(p, static_cast<unsigned long>(k)), dinv;
    if (mpz_invert(dinv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t()) == 0 && m != 1)
        throw std::logic_error("denominator not invertible");
    Integer r = x.get_num() * dinv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

// {x}_p in [0,1) with p-power denominator.
inline Rational frac_part(const Rational& x, unsigned long p) {
    int v = p_order(x, p);
    if (v >= 0) return 0;
    Integer pk = ipow(p, static_cast<unsigned long>(-v));
    Rational y = x * Rational(pk);  // p-adic unit
    return make_rational(residue(y, p, -v), pk);
}

// chi(x) = exp(2 pi i {x}_p)
inline Cyclotomic char_value(const Rational& x, unsigned long p) {
    int v = p_order(x, p);
    if (v >= 0) return Cyclotomic(p, 1);
    Rational f = frac_part(x, p);
    return Cyclotomic::root(p, -v, mpz_get_si(f.get_num_mpz_t()));
}

// Representative of x modulo p^{-gamma} Z_p whose digits all sit below position -gamma.
inline Rational canonical_coord(const Rational& x, int gamma, unsigned long p) {
    if (is_zero(x)) return x;
    return frac_part(x * rpow(p, gamma), p) * rpow(p, -gamma);
}

// {x : ||x - center|| <= p^gamma}
struct Ball {
    PVector center;
    int gamma = 0;

    std::size_t dim() const { return center.size(); }

    Rational volume(unsigned long p) const { return rpow(p, static_cast<long>(gamma) * static_cast<long>(dim())); }

    bool contains(const PVector& x, unsigned long p) const {
        if (x.size() != dim()) throw std::invalid_argument("dimension mismatch");
        for (std::size_t i = 0; i < x.size(); ++i)
            if (p_order(x[i] - center[i], p) < -gamma) return false;
        return true;
    }

    bool intersects(const Ball& o, unsigned long p) const {
        return gamma >= o.gamma ? contains(o.center, p) : o.contains(center, p);
    }

    Ball canonical(unsigned long p) const {
        Ball b{center, gamma};
        for (auto& c : b.center) c = canonical_coord(c, gamma, p);
        return b;
    }

    // The p^n disjoint balls of radius p^{gamma-1} tiling this one.
    std::vector<Ball> children(unsigned long p) const {
        std::size_t n = dim();
        std::vector<Ball> out;
        std::vector<unsigned long> d(n, 0);
        Rational step = rpow(p, -gamma);
        while (true) {
            Ball b{center, gamma - 1};
            for (std::size_t i = 0; i < n; ++i) b.center[i] += step * static_cast<long>(d[i]);
            out.push_back(std::move(b));
            std::size_t i = 0;
            while (i < n && ++d[i] == p) d[i++] = 0;
            if (i == n) break;
        }
        return out;
    }

    friend bool operator==(const Ball& a, const Ball& b) { return a.gamma == b.gamma && a.center == b.center; }
};

// Smallest Gamma with the ball inside B_Gamma(0).
inline int enclosing_radius(const Ball& b, unsigned long p) {
    int v = v_order(b.center, p);
    return v == kOrdInfinity ? b.gamma : std::max(b.gamma, -v);
}

}  // namespace padicqf
