#pragma once

#include "zeta.hpp"

#include <memory>
#include <set>

namespace padicqf {

class not_lizorkin : public std::invalid_argument {
public:
    explicit not_lizorkin(const std::string& what = "not a Lizorkin function of second kind") : std::invalid_argument(what) {}
};

enum class KernelFamily { Quaternary, BinaryUnramified, BinaryRamified };

// K_a = P(t) |f|^{a - n/2} with t = p^{-a}; P is the reciprocal of the functional-equation
// factor, so that F[K_a] = |f°|^{-a}. Admitted forms: the quaternary family and x^2 - eta y^2.
class RieszKernel {
public:
    explicit RieszKernel(const QuadraticForm& f, int depth_bound = kDefaultDepthBound)
        : f_(f), fo_(dual_of(f)), family_(family_of(f)), eng_(std::make_shared<ZetaEngine>(f, depth_bound)),
          deng_(std::make_shared<ZetaEngine>(fo_, depth_bound)) {}

    static RieszKernel quaternary(unsigned long p) { return RieszKernel(QuadraticForm::quaternary(p)); }
    static RieszKernel binary(unsigned long p, SquareClass eta) { return RieszKernel(QuadraticForm::binary(p, eta.representative(p))); }

    const QuadraticForm& form() const { return f_; }
    // the form on the Fourier side, a multiple of f*
    const QuadraticForm& dual_form() const { return fo_; }
    KernelFamily family() const { return family_; }
    unsigned long prime() const { return f_.prime(); }
    std::size_t dim() const { return f_.dim(); }
    const ZetaEngine& engine() const { return *eng_; }
    const ZetaEngine& dual_engine() const { return *deng_; }

    // Z_phihat(s) = factor(t) * int |f°|^{-s} phi
    RationalFunctionT funceq_factor() const {
        switch (family_) {
            case KernelFamily::Quaternary: return ratio(-2, -1, 1);  // (1 - p^{s-2}) / (1 - p^{-s})
            case KernelFamily::BinaryUnramified: return ratio(-2, -2, 2);
            case KernelFamily::BinaryRamified: return ratio(-1, -1, 1);
        }
        throw std::logic_error("unknown kernel family");
    }

    RationalFunctionT prefactor() const { return RationalFunctionT(one()) / funceq_factor(); }

    // <K_a, 1_{Z_p^n}>: the closed form P * Z(1_{Z_p^n}).
    RationalFunctionT unit_ball_pairing() const {
        unsigned long p = prime();
        switch (family_) {
            case KernelFamily::Quaternary: return RationalFunctionT(c(1 - rpow(p, -2)), poly(1, 0) - poly(rpow(p, -2), -1));
            case KernelFamily::BinaryUnramified: return RationalFunctionT(c(1 - rpow(p, -2)), poly(1, 0) - poly(rpow(p, -2), -2));
            case KernelFamily::BinaryRamified: return RationalFunctionT(c(1 - rpow(p, -1)), poly(1, 0) - poly(rpow(p, -1), -1));
        }
        throw std::logic_error("unknown kernel family");
    }

    // t at the log kernel: a = n/2.
    ExtScalar log_point() const { return ExtScalar(prime(), rpow(prime(), -static_cast<long>(dim() / 2))); }

    // lim_{t -> t0} (t/t0 - 1) P(t); for n = 4 this is 1 - p^{-2}.
    ExtScalar log_constant() const {
        ExtScalar t0 = log_point();
        RationalFunctionT r = prefactor() * RationalFunctionT(LaurentT::monomial(inv(t0), 1) - one());
        return r.value_after_cancellation(t0);
    }

private:
    QuadraticForm f_, fo_;
    KernelFamily family_;
    std::shared_ptr<ZetaEngine> eng_, deng_;

    LaurentT one() const { return LaurentT(ExtScalar(prime(), 1)); }
    LaurentT c(const Rational& q) const { return LaurentT(ExtScalar(prime(), q)); }
    LaurentT poly(const Rational& q, int k) const { return LaurentT::monomial(ExtScalar(prime(), q), k); }

    // (1 - p^e t^k1) / (1 - t^k2)
    RationalFunctionT ratio(int e, int k1, int k2) const {
        return RationalFunctionT(one() - poly(rpow(prime(), e), k1), one() - poly(1, k2));
    }

    // (ap, -p, -a, 1) for the quaternary family and (eta, -1) for x^2 - eta y^2
    static QuadraticForm dual_of(const QuadraticForm& f) {
        if (auto a = quaternary_parameter(f)) return f.dual().scaled(*a * static_cast<long>(f.prime()));
        if (auto eta = binary_parameter(f)) return f.dual().scaled(*eta);
        throw unsupported_input("Riesz kernels are implemented for x1^2 - a x2^2 - p x3^2 + a p x4^2 and x1^2 - eta x2^2 only");
    }

    static KernelFamily family_of(const QuadraticForm& f) {
        if (quaternary_parameter(f)) return KernelFamily::Quaternary;
        if (auto eta = binary_parameter(f)) {
            return square_class(*eta, f.prime()).odd ? KernelFamily::BinaryRamified : KernelFamily::BinaryUnramified;
        }
        throw unsupported_input("Riesz kernels are implemented for x1^2 - a x2^2 - p x3^2 + a p x4^2 and x1^2 - eta x2^2 only");
    }
};

// ---- pairings ----------------------------------------------------------------------------------

inline ExtScalar value_at_origin(const TestFunctionE& phi) { return phi.eval(PVector(phi.dim(), Rational(0))); }

inline TestFunctionE unit_ball_function(unsigned long p, std::size_t n, const ExtScalar& c) {
    return TestFunctionE::indicator(p, Ball{PVector(n, Rational(0)), 0}, c);
}

// <K_a, phi> = P(t) int |f|^{a-n/2} phi
inline RationalFunctionT riesz_pair(const RieszKernel& K, const TestFunctionE& phi) {
    return K.prefactor() * K.engine().zeta(phi);
}

// Continuation split at ||x|| <= 1: phi(0) <K_a, 1_{Z_p^n}> + P(t) int (phi - phi(0) 1_{Z_p^n}) |f|^{a-n/2}.
// The second integrand vanishes near 0, so no geometric closure is involved.
inline RationalFunctionT riesz_pair_split(const RieszKernel& K, const TestFunctionE& phi) {
    ExtScalar v0 = value_at_origin(phi);
    TestFunctionE rest = phi - unit_ball_function(K.prime(), K.dim(), v0);
    return RationalFunctionT(v0) * K.unit_ball_pairing() + K.prefactor() * K.engine().zeta(rest);
}

// <K_{-a}, phi> = P(1/t) int (phi(x) - phi(0)) |f|^{-a-n/2}, in t = p^{-a}.
inline RationalFunctionT riesz_pair_negative(const RieszKernel& K, const TestFunctionE& phi) {
    ExtScalar one(K.prime(), 1);
    ExtScalar v0 = value_at_origin(phi);
    TestFunctionE rest = phi - unit_ball_function(K.prime(), K.dim(), v0);
    RationalFunctionT inner = K.engine().zeta(rest).substitute(one, -1) - RationalFunctionT(v0) * tail_integral(K.engine());
    return K.prefactor().substitute(one, -1) * inner;
}

// K_0 = delta: the continued pairing at t = 1.
inline ExtScalar delta_limit(const RieszKernel& K, const TestFunctionE& phi) {
    return riesz_pair(K, phi).value_after_cancellation(ExtScalar(K.prime(), 1));
}

struct FourierRelation {
    RationalFunctionT lhs_pos, rhs_pos, lhs_neg, rhs_neg;
    bool positive = false, negative = false;
};

// <K_a, F psi> = int |f°|^{-a} psi and <K_{-a}, F psi> = int |f°|^{a} psi for psi in Psi.
inline FourierRelation kernel_fourier_check(const RieszKernel& K, const TestFunctionE& psi) {
    if (!lizorkin_check(psi, LizorkinSpace::Psi)) throw not_lizorkin("not in Psi: psi(0) must vanish");
    ExtScalar one(K.prime(), 1);
    FourierRelation r;
    TestFunctionE fpsi = fourier(psi);
    RationalFunctionT pair = riesz_pair(K, fpsi);
    RationalFunctionT dual = K.dual_engine().zeta(psi, SquareClass::one(), Exponent::Plain);
    r.lhs_pos = pair;
    r.rhs_pos = dual.substitute(one, -1);
    r.lhs_neg = pair.substitute(one, -1);
    r.rhs_neg = dual;
    r.positive = r.lhs_pos == r.rhs_pos;
    r.negative = r.lhs_neg == r.rhs_neg;
    return r;
}

// Limit of <K_a, phi> at the log point for phi in Phi: c * int ord(f) phi.
inline ExtScalar log_kernel_pair(const RieszKernel& K, const TestFunctionE& phi) {
    if (!lizorkin_check(phi, LizorkinSpace::Phi)) throw not_lizorkin();
    return K.log_constant() * K.engine().ord_moment(phi);
}

// ---- convolution with K_a through the Fourier side -------------------------------------------

// F[phi] split by the value of ord f° on each cell.
inline std::map<int, TestFunctionE> split_by_dual_order(const RieszKernel& K, const TestFunctionE& g) {
    std::map<int, TestFunctionE> out;
    const ZetaEngine& de = K.dual_engine();
    std::vector<std::pair<Ball, ExtScalar>> stack;
    for (const auto& [k, c] : g.terms()) stack.emplace_back(g.ball(k), c);
    while (!stack.empty()) {
        auto [b, c] = std::move(stack.back());
        stack.pop_back();
        bool origin = std::all_of(b.center.begin(), b.center.end(), [](const Rational& x) { return is_zero(x); });
        if (origin) throw not_lizorkin("Fourier transform does not vanish near 0");
        std::set<int> ords;
        for (const auto& [key, vol] : de.decompose(b).pieces) ords.insert(key.first);
        if (ords.size() == 1) {
            auto it = out.try_emplace(*ords.begin(), g.prime(), g.dim(), b.gamma).first;
            it->second.add_ball(b, c);
            continue;
        }
        for (auto& child : b.children(g.prime())) stack.emplace_back(std::move(child), c);
    }
    return out;
}

inline void require_phi(const TestFunctionE& phi) {
    if (!lizorkin_check(phi, LizorkinSpace::Phi)) throw not_lizorkin();
}

// K_{sign a} * phi = F^{-1}[|f°|^{-sign a} F phi] with symbolic a; |f°|^{-a} = t^{-ord f°}.
inline TestFunctionL riesz_convolve(const RieszKernel& K, const TestFunctionE& phi, int sign = +1) {
    require_phi(phi);
    unsigned long p = K.prime();
    TestFunctionL out(p, K.dim(), 0);
    if (phi.is_zero()) return out;
    for (const auto& [o, comp] : split_by_dual_order(K, fourier(phi))) {
        int deg = sign > 0 ? -o : o;
        TestFunctionE back = inverse_fourier(comp);
        out = out + back.map([deg](const ExtScalar& x) { return LaurentT::monomial(x, deg); });
    }
    return out;
}

// K_a * phi for an integer a: |f°|^{-a} = p^{a ord f°}. a = n/2 is the log kernel.
inline TestFunctionE riesz_convolve(const RieszKernel& K, const TestFunctionE& phi, long a) {
    require_phi(phi);
    unsigned long p = K.prime();
    TestFunctionE out(p, K.dim(), 0);
    if (phi.is_zero()) return out;
    for (const auto& [o, comp] : split_by_dual_order(K, fourier(phi)))
        out = out + inverse_fourier(comp) * rpow(p, a * o);
    return out;
}

inline TestFunctionE evaluate_at(const TestFunctionL& f, const ExtScalar& t0) {
    return f.map([&t0](const LaurentT& c) { return c.eval(t0); });
}

inline int dual_order_span(const RieszKernel& K, const TestFunctionE& phi) {
    require_phi(phi);
    if (phi.is_zero()) return 0;
    auto parts = split_by_dual_order(K, fourier(phi));
    return parts.rbegin()->first - parts.begin()->first;
}

// ---- pointwise forms --------------------------------------------------------------------------

// (K_a * phi)(x) = <K_a, phi(x + .)>
inline RationalFunctionT convolve_pointwise(const RieszKernel& K, const TestFunctionE& phi, const PVector& x) {
    return riesz_pair(K, phi.translated(x));
}

// (K_{-a} * phi)(x) = P(1/t) int (phi(x+y) - phi(x)) |f(y)|^{-a-n/2} dy
inline RationalFunctionT hypersingular_pointwise(const RieszKernel& K, const TestFunctionE& phi, const PVector& x) {
    return riesz_pair_negative(K, phi.translated(x));
}

// Float version of the hypersingular integral for a real exponent a > 0: the compact part by the
// adaptive oracle and int_{||y|| > 1} |f|^{-a-n/2} as a sum over shells ||y|| = p^m, m <= shells.
inline std::complex<double> hypersingular_float(const RieszKernel& K, const TestFunctionE& phi, const PVector& x, double a,
                                                int depth, int shells = 12) {
    unsigned long p = K.prime();
    std::size_t n = K.dim();
    TestFunctionE psi = phi.translated(x);
    ExtScalar v0 = value_at_origin(psi);
    TestFunctionE rest = psi - unit_ball_function(p, n, v0);
    std::complex<double> s(-a, 0.0);
    std::complex<double> inner = zeta_oracle_float(K.form(), rest, SquareClass::one(), Exponent::Shifted, s, depth);
    std::complex<double> tail = 0;
    for (int m = 1; m <= shells; ++m) {
        TestFunctionE shell = TestFunctionE::indicator(p, Ball{PVector(n, Rational(0)), m}, ExtScalar(p, 1)) -
                              TestFunctionE::indicator(p, Ball{PVector(n, Rational(0)), m - 1}, ExtScalar(p, 1));
        tail += zeta_oracle_float(K.form(), shell, SquareClass::one(), Exponent::Shifted, s, depth);
    }
    std::complex<double> pre = eval_float(K.prefactor(), std::pow(static_cast<double>(p), a));
    return pre * (inner - v0.to_complex() * tail);
}

// ---- group law --------------------------------------------------------------------------------

struct GroupLawCase {
    long a = 0, b = 0;
    bool equal = false;
};

struct GroupLawReport {
    std::vector<GroupLawCase> cases;
    int degree_span = 0;
    bool ok = false;
};

inline std::vector<std::pair<long, long>> default_group_grid() {
    std::vector<std::pair<long, long>> g;
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) g.emplace_back(a, b);
    g.insert(g.end(), {{-1, -1}, {-1, 2}, {2, -1}});
    return g;
}

// K_a * (K_b * phi) = K_{a+b} * phi at integer points. Both sides are Laurent polynomials in
// (p^a, p^b) of degree span at most the spread of ord f° on supp F phi, so a full product grid
// with span + 1 values per axis certifies the identity; the grid is enlarged when needed.
inline GroupLawReport group_law_verify(const RieszKernel& K, const TestFunctionE& phi,
                                       std::vector<std::pair<long, long>> grid = default_group_grid()) {
    GroupLawReport rep;
    rep.degree_span = dual_order_span(K, phi);
    long need = rep.degree_span + 1;
    std::set<std::pair<long, long>> have(grid.begin(), grid.end());
    for (long a = 1; a <= need; ++a)
        for (long b = 1; b <= need; ++b)
            if (!have.count({a, b})) grid.emplace_back(a, b);
    std::map<long, TestFunctionE> single;
    auto conv = [&](long a) -> const TestFunctionE& {
        auto it = single.find(a);
        if (it == single.end()) it = single.emplace(a, riesz_convolve(K, phi, a)).first;
        return it->second;
    };
    rep.ok = true;
    for (auto [a, b] : grid) {
        TestFunctionE lhs = riesz_convolve(K, conv(b), a);
        GroupLawCase c{a, b, lhs == conv(a + b)};
        rep.ok = rep.ok && c.equal;
        rep.cases.push_back(c);
    }
    return rep;
}

}  // namespace padicqf
