#pragma once

#include "riesz.hpp"

namespace padicqf {

// f(d, a) phi = F^{-1}[ |f°|^a F phi ] = K_{-a} * phi on Phi.
struct PseudoOp {
    RieszKernel kernel;
    long alpha = 1;
};

struct PseudoResult {
    TestFunctionE value;
    bool paths_agree = false;
};

// Refines F phi uniformly until ord f° is constant on every cell (checked by the box certificate
// of the dual engine), then multiplies cellwise by |f°|^a = p^{-a ord f°}.
inline TestFunctionE apply_multiplier(const RieszKernel& K, const TestFunctionE& g, long a) {
    unsigned long p = K.prime();
    const ZetaEngine& de = K.dual_engine();
    TestFunctionE cur = g;
    for (int level = 0; level <= kDefaultDepthBound; ++level) {
        TestFunctionE out(p, g.dim(), cur.gamma());
        bool uniform = true;
        for (const auto& [k, c] : cur.terms()) {
            Ball b = cur.ball(k);
            if (std::all_of(k.begin(), k.end(), [](const Rational& x) { return is_zero(x); }))
                throw not_lizorkin("Fourier transform does not vanish near 0");
            const auto& pieces = de.decompose(b).pieces;
            int o = pieces.begin()->first.first;
            if (pieces.rbegin()->first.first != o) {
                uniform = false;
                break;
            }
            out.add_at(k, c * ExtScalar(p, rpow(p, -a * o)));
        }
        if (uniform) return out;
        cur = cur.refined(cur.gamma() - 1);
    }
    throw depth_exceeded("multiplier refinement exceeded the depth bound");
}

inline PseudoResult pseudo_apply(const PseudoOp& op, const TestFunctionE& phi) {
    require_phi(phi);
    PseudoResult r;
    r.value = inverse_fourier(apply_multiplier(op.kernel, fourier(phi), op.alpha));
    r.paths_agree = r.value == riesz_convolve(op.kernel, phi, -op.alpha);
    return r;
}

// Symbolic exponent: coefficients are Laurent polynomials in t = p^{-a}.
inline TestFunctionL pseudo_apply_symbolic(const RieszKernel& K, const TestFunctionE& phi) { return riesz_convolve(K, phi, -1); }

// <f(d,a) J, phi> = <J, f(d,a) phi>
inline bool pseudo_duality_check(const RieszKernel& K, const TestFunctionE& J, const TestFunctionE& phi, long a) {
    PseudoOp op{K, a};
    return pointwise_product(pseudo_apply(op, J).value, phi).integral() == pointwise_product(J, pseudo_apply(op, phi).value).integral();
}

// f(d,a) f(d,b) = f(d,a+b) over the grid.
inline bool pseudo_semigroup_verify(const RieszKernel& K, const TestFunctionE& phi,
                                    const std::vector<std::pair<long, long>>& grid = default_group_grid()) {
    for (auto [a, b] : grid) {
        TestFunctionE once = pseudo_apply(PseudoOp{K, b}, phi).value;
        if (pseudo_apply(PseudoOp{K, a}, once).value != pseudo_apply(PseudoOp{K, a + b}, phi).value) return false;
    }
    return true;
}

// ---- fundamental solutions -------------------------------------------------------------------

struct FundamentalReport {
    TestFunctionE solution;
    bool round_trip = false;     // f(d,a) u = phi
    bool multiplier = false;     // |f°|^a F u = F phi
    bool in_phi = false;
    bool paths_agree = false;
    bool spatial = false;        // u(x) = <E_a, phi(x + .)> at the sampled points
    bool ok() const { return round_trip && multiplier && in_phi && paths_agree && spatial; }
};

// u = E_a * phi with E_a = K_a; at a = n/2 E_a is the log kernel, whose pairing is c ord-moment.
inline FundamentalReport fundamental_solve(const PseudoOp& op, const TestFunctionE& phi, std::vector<PVector> samples = {}) {
    require_phi(phi);
    const RieszKernel& K = op.kernel;
    unsigned long p = K.prime();
    FundamentalReport r;
    r.solution = riesz_convolve(K, phi, op.alpha);
    PseudoResult back = pseudo_apply(op, r.solution);
    r.round_trip = back.value == phi;
    r.paths_agree = back.paths_agree;
    r.multiplier = apply_multiplier(K, fourier(r.solution), op.alpha) == fourier(phi);
    r.in_phi = lizorkin_check(r.solution, LizorkinSpace::Phi);
    if (samples.empty()) {
        samples.emplace_back(K.dim(), Rational(0));
        for (const auto& [k, c] : r.solution.terms()) {
            samples.push_back(k);
            if (samples.size() == 3) break;
        }
    }
    bool log_case = 2 * op.alpha == static_cast<long>(K.dim());
    ExtScalar t(p, rpow(p, -op.alpha));
    r.spatial = true;
    for (const auto& x : samples) {
        TestFunctionE shifted = phi.translated(x);
        ExtScalar v = log_case ? log_kernel_pair(K, shifted) : riesz_pair(K, shifted).value_after_cancellation(t);
        r.spatial = r.spatial && v == r.solution.eval(x);
    }
    return r;
}

// ---- Bernstein-type identity -----------------------------------------------------------------

struct BernsteinReport {
    RationalFunctionT lhs, rhs, factor;
    bool equal = false;
    bool intermediate = true;
};

// A(T) with T = p^{-s}: f(d,1) |f|^{s+1} = A |f|^s, obtained as P(p^{-n/2} T) / P(p^{-n/2-1} T).
inline RationalFunctionT bernstein_factor(const RieszKernel& K) {
    unsigned long p = K.prime();
    long h = static_cast<long>(K.dim() / 2);
    RationalFunctionT P = K.prefactor();
    return P.substitute(ExtScalar(p, rpow(p, -h)), 1) / P.substitute(ExtScalar(p, rpow(p, -h - 1)), 1);
}

// <f(d,1)|f|^{s+1}, phi> = <|f|^{s+1}, f(d,1) phi>, compared with A(T) <|f|^s, phi>.
inline BernsteinReport bernstein_verify(const RieszKernel& K, const TestFunctionE& phi) {
    unsigned long p = K.prime();
    const ZetaEngine& eng = K.engine();
    BernsteinReport r;
    TestFunctionE psi = pseudo_apply(PseudoOp{K, 1}, phi).value;
    r.lhs = eng.zeta(psi, SquareClass::one(), Exponent::Plain).substitute(ExtScalar(p, rpow(p, -1)), 1);
    r.factor = bernstein_factor(K);
    RationalFunctionT z = eng.zeta(phi, SquareClass::one(), Exponent::Plain);
    r.rhs = r.factor * z;
    r.equal = r.lhs == r.rhs;
    // |f|^{s+1} = P(t)^{-1} K_{s+1+n/2} with t = p^{-n/2-1} T
    ExtScalar c(p, rpow(p, -static_cast<long>(K.dim() / 2) - 1));
    RationalFunctionT via_kernel = K.prefactor().substitute(c, 1) * eng.zeta(phi).substitute(c, 1);
    r.intermediate = z.substitute(ExtScalar(p, rpow(p, -1)), 1) == RationalFunctionT(one_like(c)) / K.prefactor().substitute(c, 1) * via_kernel;
    return r;
}

// ---- functional equations --------------------------------------------------------------------

enum class FunceqPath { General, Certified };

struct FunceqReport {
    RationalFunctionT lhs, rhs_factor, rhs_zeta;
    bool equal = false;
    bool paths_agree = true;
    TestFunctionE witness;
};

// Z_{phihat}(s) = rho(pi_1, s - n/2 + 1) rho(pi_{D*}, s) |D|^{-1/2} gamma(f) Z*_phi(-s + n/2, pi_{D*})
inline FunceqReport funceq_general(const QuadraticForm& f, const TestFunctionE& phi, int depth_bound = kDefaultDepthBound) {
    unsigned long p = f.prime();
    std::size_t n = f.dim();
    if (n % 2) throw unsupported_input("functional equation needs an even number of variables");
    auto inv = form_invariants(f);
    SquareClass dstar = *inv.d_star_class;
    ExtScalar one(p, 1);
    FunceqReport r;
    r.witness = phi;
    r.lhs = ZetaEngine(f, depth_bound).zeta(fourier(phi), SquareClass::one(), Exponent::Shifted);
    RationalFunctionT rho1 = rho_factor(SquareClass::one(), p).substitute(ExtScalar::half_power(p, static_cast<long>(n) - 2), 1);
    ExtScalar c = ExtScalar::half_power(p, p_order(f.discriminant(), p)) * inv.weil_gamma;
    r.rhs_factor = rho1 * rho_factor(dstar, p) * RationalFunctionT(c);
    r.rhs_zeta = ZetaEngine(f.dual(), depth_bound).zeta(phi, dstar, Exponent::Plain).substitute(one, -1);
    r.equal = r.lhs == r.rhs_factor * r.rhs_zeta;
    return r;
}

// Simplified factor for the two kernel families: Z_{phihat}(s) = factor * int |f°|^{-s} phi.
inline FunceqReport funceq_certified(const RieszKernel& K, const TestFunctionE& phi) {
    ExtScalar one(K.prime(), 1);
    FunceqReport r;
    r.witness = phi;
    r.lhs = K.engine().zeta(fourier(phi), SquareClass::one(), Exponent::Shifted);
    r.rhs_factor = K.funceq_factor();
    r.rhs_zeta = K.dual_engine().zeta(phi, SquareClass::one(), Exponent::Plain).substitute(one, -1);
    r.equal = r.lhs == r.rhs_factor * r.rhs_zeta;
    return r;
}

inline FunceqReport funceq_verify(const QuadraticForm& f, const TestFunctionE& phi, FunceqPath path) {
    FunceqReport general = funceq_general(f, phi);
    if (path == FunceqPath::General) return general;
    FunceqReport cert = funceq_certified(RieszKernel(f), phi);
    cert.paths_agree = general.equal && cert.lhs == general.lhs && cert.rhs_factor * cert.rhs_zeta == general.rhs_factor * general.rhs_zeta;
    return cert;
}

// ---- the extended domain E_{f,a} --------------------------------------------------------------

// phi = 1 on Z_p^n and c p^{-kappa m} on ||x|| = p^m, m >= 1: not compactly supported, with
// |phi| <= c ||x||^{-kappa}. The tail criterion int_{||x|| >= 1} |phi| / |f|^{a + n/2} < oo
// reduces to kappa + 2a > 0.
struct TailSample {
    long kappa = 6;
    Rational c = 1;
};

inline bool tail_criterion(const TailSample& e, long a) { return e.kappa + 2 * a > 0; }

// (f(d,a) phi)(0) = P(1/t) int (phi(y) - phi(0)) |f(y)|^{-a-n/2} dy at t = p^{-a}. Shell m
// contributes (c p^{-kappa m} - 1) p^{-2am} I_U with I_U the unit-sphere integral at exponent -a.
inline ExtScalar tail_sample_hypersingular(const RieszKernel& K, const TailSample& e, long a) {
    if (!tail_criterion(e, a)) throw std::domain_error("sample outside the extended domain");
    unsigned long p = K.prime();
    ExtScalar T(p, rpow(p, a));
    Rational r1 = rpow(p, -(e.kappa + 2 * a)), r2 = rpow(p, -2 * a);
    Rational series = e.c * r1 / (1 - r1) - r2 / (1 - r2);
    ExtScalar iu = unit_sphere_integral(K.engine()).total.eval(T);
    return K.prefactor().eval(T) * iu * series;
}

// The same value from the float oracle, shells m <= shells.
inline std::complex<double> tail_sample_hypersingular_float(const RieszKernel& K, const TailSample& e, double a, int shells = 8,
                                                            int depth = 6) {
    unsigned long p = K.prime();
    std::size_t n = K.dim();
    ExtScalar one(p, 1);
    std::complex<double> s(-a, 0.0), sum = 0;
    for (int m = 1; m <= shells; ++m) {
        TestFunctionE shell = TestFunctionE::indicator(p, Ball{PVector(n, Rational(0)), m}, one) -
                              TestFunctionE::indicator(p, Ball{PVector(n, Rational(0)), m - 1}, one);
        double w = e.c.get_d() * std::pow(static_cast<double>(p), -static_cast<double>(e.kappa) * m) - 1.0;
        sum += w * zeta_oracle_float(K.form(), shell, SquareClass::one(), Exponent::Shifted, s, depth);
    }
    return eval_float(K.prefactor(), std::pow(static_cast<double>(p), a)) * sum;
}

}  // namespace padicqf
