#pragma once

#include "quadform.hpp"
#include "schwartz.hpp"

#include <array>
#include <complex>

namespace padicqf {

// Plain: |f|^s with T = p^{-s}. Shifted: |f|^{s - n/2} with t = p^{-s}.
enum class Exponent { Plain, Shifted };

// Volumes of the level sets {ord f = k, unit part of f a non-residue or not}.
using PieceMap = std::map<std::pair<int, bool>, Rational>;

struct BallDecomposition {
    PieceMap pieces;
    // When set, pieces tile the shell B \ pB of a 0-centred ball and the ball integral is
    // I(shell) / (1 - p^{-n} T^2).
    bool closure = false;
    Rational volume;
};

// Axis-parallel product of one-dimensional balls a_i + p^{-gamma_i} Z_p.
struct Box {
    PVector center;
    std::vector<int> gamma;
};

class ZetaEngine {
public:
    explicit ZetaEngine(QuadraticForm f, int depth_bound = kDefaultDepthBound) : f_(std::move(f)), depth_bound_(depth_bound) {
        for (const auto& c : f_.coeffs()) coeff_ord_.push_back(p_order(c, f_.prime()));
    }

    const QuadraticForm& form() const { return f_; }
    unsigned long prime() const { return f_.prime(); }
    std::size_t dim() const { return f_.dim(); }

    const BallDecomposition& decompose(const Ball& ball) const {
        unsigned long p = prime();
        if (ball.dim() != dim()) throw std::invalid_argument("dimension mismatch");
        Ball b = ball.canonical(p);
        auto key = std::make_pair(b.center, b.gamma);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        BallDecomposition d;
        d.volume = b.volume(p);
        bool at_origin = std::all_of(b.center.begin(), b.center.end(), [](const Rational& x) { return is_zero(x); });
        if (at_origin) {
            d.closure = true;
            for (auto& box : shell_boxes(Box{b.center, std::vector<int>(dim(), b.gamma)})) tile(std::move(box), d.pieces);
        } else {
            tile(Box{b.center, std::vector<int>(dim(), b.gamma)}, d.pieces);
        }
        return memo_.emplace(key, std::move(d)).first->second;
    }

    RationalFunctionT zeta(const TestFunctionE& phi, SquareClass beta = SquareClass::one(), Exponent e = Exponent::Shifted) const {
        check(phi.prime(), phi.dim());
        LaurentT regular, shell;
        for (const auto& [k, c] : phi.terms()) {
            const auto& d = decompose(phi.ball(k));
            (d.closure ? shell : regular) += pieces_poly(d.pieces, beta, e) * c;
        }
        return assemble(regular, shell, e);
    }

    // Coefficients that are Laurent polynomials in the same variable.
    RationalFunctionT zeta(const TestFunctionL& phi, SquareClass beta = SquareClass::one(), Exponent e = Exponent::Shifted) const {
        check(phi.prime(), phi.dim());
        LaurentT regular, shell;
        for (const auto& [k, c] : phi.terms()) {
            const auto& d = decompose(phi.ball(k));
            (d.closure ? shell : regular) += pieces_poly(d.pieces, beta, e) * c;
        }
        return assemble(regular, shell, e);
    }

    RationalFunctionT zeta_ball(const Ball& b, SquareClass beta = SquareClass::one(), Exponent e = Exponent::Shifted) const {
        const auto& d = decompose(b);
        LaurentT poly = pieces_poly(d.pieces, beta, e);
        return d.closure ? assemble(LaurentT(), poly, e) : RationalFunctionT(poly);
    }

    // int ord(f(x)) phi(x) dx
    ExtScalar ord_moment(const TestFunctionE& phi) const {
        check(phi.prime(), phi.dim());
        unsigned long p = prime();
        Rational q = rpow(p, -static_cast<long>(dim()));
        ExtScalar s(p, 0);
        for (const auto& [k, c] : phi.terms()) {
            const auto& d = decompose(phi.ball(k));
            Rational m = 0;
            for (const auto& [key, vol] : d.pieces) m += vol * key.first;
            // M(B) = M(shell) + M(pB) and M(pB) = p^{-n} (M(B) + 2 vol(B))
            if (d.closure) m = (m + 2 * q * d.volume) / (1 - q);
            s = s + c * m;
        }
        return s;
    }

    // Denominator of the closure term in the chosen variable.
    LaurentT closure_denominator(Exponent e) const {
        unsigned long p = prime();
        ExtScalar one(p, 1);
        Rational c = e == Exponent::Plain ? rpow(p, -static_cast<long>(dim())) : Rational(1);
        return LaurentT(one) - LaurentT::monomial(ExtScalar(p, c), 2);
    }

private:
    QuadraticForm f_;
    int depth_bound_;
    std::vector<int> coeff_ord_;
    // decompositions only depend on the ball, so caching keeps the engine logically const
    mutable std::map<std::pair<PVector, int>, BallDecomposition> memo_;

    void check(unsigned long p, std::size_t n) const {
        if (p != prime()) throw prime_mismatch();
        if (n != dim()) throw std::invalid_argument("dimension mismatch");
    }

    // B \ pB for a 0-centred box: coordinate i carries the first nonzero leading digit.
    std::vector<Box> shell_boxes(const Box& b) const {
        unsigned long p = prime();
        std::vector<Box> out;
        for (std::size_t i = 0; i < dim(); ++i)
            for (unsigned long d = 1; d < p; ++d) {
                Box c = b;
                for (std::size_t j = 0; j < i; ++j) c.gamma[j] = b.gamma[j] - 1;
                c.center[i] = rpow(p, -b.gamma[i]) * static_cast<long>(d);
                c.gamma[i] = b.gamma[i] - 1;
                out.push_back(std::move(c));
            }
        return out;
    }

    // Splits a box not containing 0 until ord f and its square class are constant.
    // f(a+h) - f(a) = sum c_i (2 a_i h_i + h_i^2) has order >= m* on the box.
    void tile(Box root, PieceMap& out) const {
        unsigned long p = prime();
        std::vector<std::pair<Box, int>> stack;
        stack.emplace_back(std::move(root), 0);
        while (!stack.empty()) {
            auto [box, depth] = std::move(stack.back());
            stack.pop_back();
            if (depth > depth_bound_) throw depth_exceeded("form appears isotropic on support");
            Rational fa = f_(box.center);
            int of = is_zero(fa) ? kOrdInfinity : p_order(fa, p);
            int mstar = kOrdInfinity;
            std::size_t arg = 0;
            for (std::size_t i = 0; i < dim(); ++i) {
                int m = coeff_ord_[i] - 2 * box.gamma[i];
                int oa = p_order(box.center[i], p);
                if (oa != kOrdInfinity) m = std::min(m, coeff_ord_[i] + oa - box.gamma[i]);
                if (m < mstar) {
                    mstar = m;
                    arg = i;
                }
            }
            if (of != kOrdInfinity && of + 1 <= mstar) {
                long g = 0;
                for (int x : box.gamma) g += x;
                out[{of, legendre(Integer(unit_residue(fa, p)), p) == -1}] += rpow(p, g);
                continue;
            }
            Rational step = rpow(p, -box.gamma[arg]);
            for (unsigned long d = 0; d < p; ++d) {
                Box c = box;
                c.center[arg] += step * static_cast<long>(d);
                c.gamma[arg] -= 1;
                stack.emplace_back(std::move(c), depth + 1);
            }
        }
    }

    LaurentT pieces_poly(const PieceMap& pieces, SquareClass beta, Exponent e) const {
        unsigned long p = prime();
        LaurentT out;
        for (const auto& [key, vol] : pieces) {
            auto [k, nonres] = key;
            SquareClass cls{(k % 2 + 2) % 2 == 1, nonres};
            ExtScalar c(p, vol * hilbert(beta, cls, p));
            // |f|^{s-n/2} = t^k p^{kn/2}
            if (e == Exponent::Shifted) c = c * ExtScalar::half_power(p, static_cast<long>(k) * static_cast<long>(dim()));
            out.add_term(k, c);
        }
        return out;
    }

    RationalFunctionT assemble(const LaurentT& regular, const LaurentT& shell, Exponent e) const {
        if (shell.is_zero()) return RationalFunctionT(regular);
        LaurentT den = closure_denominator(e);
        return RationalFunctionT(regular * den + shell, den);
    }
};

struct ZetaRequest {
    QuadraticForm form;
    TestFunctionE phi;
    SquareClass beta = SquareClass::one();
    Exponent exponent = Exponent::Shifted;
};

struct ZetaResult {
    RationalFunctionT value;
    std::string convergence_note;
    std::string method;  // "certified" or "geometric-closure"
};

inline ZetaResult zeta(const ZetaRequest& req, int depth_bound = kDefaultDepthBound) {
    ZetaEngine eng(req.form, depth_bound);
    ZetaResult r;
    r.value = eng.zeta(req.phi, req.beta, req.exponent);
    bool closure = false;
    for (const auto& [k, c] : req.phi.terms()) closure = closure || eng.decompose(req.phi.ball(k)).closure;
    r.method = closure ? "geometric-closure" : "certified";
    r.convergence_note = req.exponent == Exponent::Shifted ? "Re(s) > n/2" : "Re(s) > 0";
    return r;
}

// ---- unit sphere, tail, and the 0/1 box table ------------------------------------------------

struct UnitBoxRow {
    std::vector<int> index;  // 1: coordinate in pZ_p, 0: coordinate a unit
    RationalFunctionT value;
};

struct UnitSphereTable {
    std::vector<UnitBoxRow> rows;
    RationalFunctionT total;
};

// Indicator of U^(i) = prod_j (pZ_p if i_j = 1 else Z_p^x), on balls of radius p^{-1}.
inline TestFunctionE unit_box_indicator(unsigned long p, const std::vector<int>& index) {
    std::size_t n = index.size();
    TestFunctionE out(p, n, -1);
    std::vector<unsigned long> d(n, 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = index[i] ? 0 : 1;
    while (true) {
        PVector c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = Rational(static_cast<long>(d[i]));
        out.add_at(c, ExtScalar(p, 1));
        std::size_t i = 0;
        while (i < n) {
            if (index[i] == 0 && ++d[i] < p) break;
            if (index[i] == 0) d[i] = 1;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

// int_{||x|| = 1} pi_beta(f) |f|^{s-n/2}, split over the 2^n - 1 boxes U^(i).
inline UnitSphereTable unit_sphere_integral(const ZetaEngine& eng, SquareClass beta = SquareClass::one()) {
    std::size_t n = eng.dim();
    UnitSphereTable tab;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<int> idx(n);
        for (std::size_t j = 0; j < n; ++j) idx[j] = (mask >> (n - 1 - j)) & 1u;
        UnitBoxRow row{idx, eng.zeta(unit_box_indicator(eng.prime(), idx), beta)};
        tab.total += row.value;
        tab.rows.push_back(std::move(row));
    }
    return tab;
}

// int_{||x|| > 1} pi_beta(f) |f|^{-a-n/2} as a function of t = p^{-a}:
// sum_{m >= 1} p^{-2ma} I_U(-a) = t^2/(1 - t^2) I_U(1/t).
inline RationalFunctionT tail_integral(const ZetaEngine& eng, SquareClass beta = SquareClass::one()) {
    unsigned long p = eng.prime();
    ExtScalar one(p, 1);
    RationalFunctionT iu = unit_sphere_integral(eng, beta).total.substitute(one, -1);
    return RationalFunctionT(LaurentT::monomial(one, 2), LaurentT(one) - LaurentT::monomial(one, 2)) * iu;
}

// Float evaluation of an exact rational function at a complex point.
inline std::complex<double> eval_float(const RationalFunctionT& r, std::complex<double> t) {
    auto ev = [&](const LaurentT& f) {
        std::complex<double> s = 0;
        f.for_each([&](int k, const ExtScalar& c) { s += c.to_complex() * std::pow(t, k); });
        return s;
    };
    return ev(r.numerator()) / ev(r.denominator());
}

// ---- float oracle -----------------------------------------------------------------------------

namespace detail {

struct OracleCell {
    int ord;
    bool nonres;
    bool operator==(const OracleCell& o) const { return ord == o.ord && nonres == o.nonres; }
};

inline OracleCell oracle_cell(const QuadraticForm& f, const PVector& x) {
    Rational v = f(x);
    if (is_zero(v)) return {kOrdInfinity, false};
    unsigned long p = f.prime();
    return {p_order(v, p), legendre(Integer(unit_residue(v, p)), p) == -1};
}

inline std::complex<double> oracle_ball(const QuadraticForm& f, const Ball& b, SquareClass beta, std::complex<double> e,
                                        int depth) {
    unsigned long p = f.prime();
    std::size_t n = f.dim();
    double lp = std::log(static_cast<double>(p));
    double vol = std::pow(static_cast<double>(p), static_cast<double>(b.gamma) * static_cast<double>(n));
    bool origin = std::all_of(b.center.begin(), b.center.end(), [](const Rational& x) { return is_zero(x); });
    if (origin) {
        // homogeneity: the ball is its shell plus a copy scaled by p
        std::complex<double> s = 0;
        for (const auto& c : b.children(p)) {
            if (std::all_of(c.center.begin(), c.center.end(), [](const Rational& x) { return is_zero(x); })) continue;
            s += oracle_ball(f, c, beta, e, depth);
        }
        return s / (1.0 - std::pow(static_cast<double>(p), -static_cast<double>(n)) * std::exp(-2.0 * e * lp));
    }
    OracleCell c0 = oracle_cell(f, b.center);
    bool uniform = c0.ord != kOrdInfinity;
    Rational h = rpow(p, -b.gamma);
    for (std::size_t i = 0; uniform && i <= n; ++i) {
        PVector x = b.center;
        if (i < n) x[i] += h;
        else
            for (auto& xi : x) xi += h;
        uniform = oracle_cell(f, x) == c0;
    }
    if (!uniform && depth > 0) {
        std::complex<double> s = 0;
        for (const auto& c : b.children(p)) s += oracle_ball(f, c, beta, e, depth - 1);
        return s;
    }
    if (c0.ord == kOrdInfinity) return 0;
    double sign = hilbert(beta, SquareClass{(c0.ord % 2 + 2) % 2 == 1, c0.nonres}, p);
    return sign * vol * std::exp(-static_cast<double>(c0.ord) * e * lp);
}

}  // namespace detail

// Adaptive Riemann sum for int pi_beta(f)|f|^{exponent} phi. A cell is accepted once the order
// and square class of f agree at its centre and at probes on its boundary digits; otherwise it is
// refined, up to depth levels below the radius of phi.
inline std::complex<double> zeta_oracle_float(const QuadraticForm& f, const TestFunctionE& phi, SquareClass beta,
                                              Exponent conv, std::complex<double> s, int depth) {
    if (depth < 0 || depth > 10) throw std::invalid_argument("oracle depth must lie in [0, 10]");
    std::complex<double> e = conv == Exponent::Plain ? s : s - static_cast<double>(f.dim()) / 2.0;
    std::complex<double> total = 0;
    for (const auto& [k, c] : phi.terms()) total += c.to_complex() * detail::oracle_ball(f, phi.ball(k), beta, e, depth);
    return total;
}

}  // namespace padicqf
