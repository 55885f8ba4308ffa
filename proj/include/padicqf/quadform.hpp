#pragma once

#include "padic.hpp"
#include "ratfun.hpp"
#include "rho_sign_table.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <sstream>

namespace padicqf {

inline int legendre(const Integer& a, unsigned long p) {
    Integer P(p);
    if (mpz_divisible_p(a.get_mpz_t(), P.get_mpz_t())) throw std::invalid_argument("legendre symbol of a multiple of p");
    return mpz_legendre(a.get_mpz_t(), P.get_mpz_t());
}
inline int legendre(long a, unsigned long p) { return legendre(Integer(a), p); }

inline unsigned long smallest_nonresidue(unsigned long p) {
    for (unsigned long e = 2;; ++e)
        if (legendre(Integer(e), p) == -1) return e;
}

// Element of Q_p^x / squares, encoded by the parity of the order and the residue character.
struct SquareClass {
    bool odd = false;        // ord is odd
    bool nonresidue = false; // unit part is a non-square

    static SquareClass one() { return {false, false}; }
    static SquareClass eps() { return {false, true}; }
    static SquareClass p() { return {true, false}; }
    static SquareClass eps_p() { return {true, true}; }
    static std::vector<SquareClass> all() { return {one(), eps(), p(), eps_p()}; }

    Rational representative(unsigned long prime) const {
        Rational r(nonresidue ? static_cast<long>(smallest_nonresidue(prime)) : 1L);
        return odd ? r * static_cast<long>(prime) : r;
    }
    std::string name() const {
        static const char* names[] = {"1", "eps", "p", "epsp"};
        return names[(odd ? 2 : 0) + (nonresidue ? 1 : 0)];
    }
    static SquareClass parse(const std::string& s) {
        for (auto c : all())
            if (c.name() == s) return c;
        throw std::invalid_argument("unknown square class '" + s + "' (expected 1, eps, p, epsp)");
    }

    friend SquareClass operator*(SquareClass a, SquareClass b) { return {a.odd != b.odd, a.nonresidue != b.nonresidue}; }
    friend bool operator==(SquareClass a, SquareClass b) { return a.odd == b.odd && a.nonresidue == b.nonresidue; }
    friend bool operator!=(SquareClass a, SquareClass b) { return !(a == b); }
};

inline SquareClass square_class(const Rational& x, unsigned long p) {
    if (is_zero(x)) throw std::invalid_argument("square class of zero");
    int v = p_order(x, p);
    return {(v % 2 + 2) % 2 == 1, legendre(Integer(unit_residue(x, p)), p) == -1};
}

inline int hilbert(SquareClass a, SquareClass b, unsigned long p) {
    int s = 1;
    if (a.odd && b.odd && ((p - 1) / 2) % 2 == 1) s = -s;
    if (b.odd && a.nonresidue) s = -s;
    if (a.odd && b.nonresidue) s = -s;
    return s;
}

inline int hilbert(const Rational& a, const Rational& b, unsigned long p) {
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("hilbert symbol of zero");
    return hilbert(square_class(a, p), square_class(b, p), p);
}

// pi_beta(x) = (beta, x)_p
inline int pi_beta(const Rational& beta, const Rational& x, unsigned long p) { return hilbert(beta, x, p); }
inline int pi_beta(SquareClass beta, const Rational& x, unsigned long p) { return hilbert(beta, square_class(x, p), p); }

// Weil constant of x -> chi(alpha x^2).
inline ExtScalar weil_gamma(SquareClass c, unsigned long p) {
    if (!c.odd) return ExtScalar(p, 1);
    return ExtScalar::sigma(p) * Rational(c.nonresidue ? -1 : 1);
}
inline ExtScalar weil_gamma(const Rational& alpha, unsigned long p) {
    if (is_zero(alpha)) throw std::invalid_argument("weil constant of zero");
    return weil_gamma(square_class(alpha, p), p);
}

// Normalized quadratic exponential sum over Z/p^m with m = ord(alpha) mod 2 and m <= depth.
inline std::complex<double> weil_gamma_oracle(const Rational& alpha, unsigned long p, int depth) {
    if (depth < 1) throw std::invalid_argument("oracle depth must be >= 1");
    int v = p_order(alpha, p);
    int m = depth - ((depth - v) % 2 + 2) % 2;
    if (m <= 0) m += 2;
    std::int64_t M = Cyclotomic::order(p, m);
    std::int64_t u = residue(alpha * rpow(p, -v), p, m).get_si();
    std::complex<double> s = 0;
    for (std::int64_t y = 0; y < M; ++y) {
        __int128 e = static_cast<__int128>(u) * y % M * y % M;
        double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(M);
        s += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s / std::abs(s);
}

class QuadraticForm {
public:
    QuadraticForm() = default;
    QuadraticForm(unsigned long p, std::vector<Rational> coeffs) : p_(p), a_(std::move(coeffs)) {
        require_odd_prime(p_);
        if (a_.empty()) throw std::invalid_argument("quadratic form needs at least one coefficient");
        for (const auto& c : a_)
            if (is_zero(c)) throw std::invalid_argument("quadratic form coefficients must be nonzero");
    }

    // "1,-2,-5,10"
    static QuadraticForm parse(unsigned long p, const std::string& s) {
        std::vector<Rational> c;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
        return QuadraticForm(p, std::move(c));
    }

    // x1^2 - a x2^2 - p x3^2 + a p x4^2
    static QuadraticForm quaternary(unsigned long p, long a) {
        long P = static_cast<long>(p);
        return QuadraticForm(p, {Rational(1), Rational(-a), Rational(-P), Rational(a * P)});
    }
    static QuadraticForm quaternary(unsigned long p) { return quaternary(p, static_cast<long>(smallest_nonresidue(p))); }
    // x1^2 - eta x2^2
    static QuadraticForm binary(unsigned long p, const Rational& eta) { return QuadraticForm(p, {Rational(1), -eta}); }

    unsigned long prime() const { return p_; }
    std::size_t dim() const { return a_.size(); }
    const std::vector<Rational>& coeffs() const { return a_; }

    Rational operator()(const PVector& x) const {
        if (x.size() != a_.size()) throw std::invalid_argument("dimension mismatch");
        Rational s = 0;
        for (std::size_t i = 0; i < a_.size(); ++i) s += a_[i] * x[i] * x[i];
        return s;
    }

    // f*(x) = f(x1/a1, ..., xn/an)
    QuadraticForm dual() const {
        std::vector<Rational> c;
        for (const auto& a : a_) c.push_back(1 / a);
        return QuadraticForm(p_, std::move(c));
    }

    QuadraticForm scaled(const Rational& t) const {
        std::vector<Rational> c;
        for (const auto& a : a_) c.push_back(a * t);
        return QuadraticForm(p_, std::move(c));
    }

    Rational discriminant() const {
        Rational d = 1;
        for (const auto& a : a_) d *= a;
        return d;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& a : a_) s += (s.empty() ? "" : ",") + to_short_string(a);
        return s;
    }

    friend bool operator==(const QuadraticForm& f, const QuadraticForm& g) { return f.p_ == g.p_ && f.a_ == g.a_; }

private:
    unsigned long p_ = 3;
    std::vector<Rational> a_;
};

struct FormInvariants {
    std::size_t dim = 0;
    SquareClass discriminant_class;
    int hasse = 1;
    std::optional<SquareClass> d_star_class;
    ExtScalar weil_gamma;
};

inline ExtScalar weil_gamma_form(const QuadraticForm& f) {
    ExtScalar g(f.prime(), 1);
    for (const auto& a : f.coeffs()) g = g * weil_gamma(a, f.prime());
    return g;
}

inline FormInvariants form_invariants(const QuadraticForm& f) {
    unsigned long p = f.prime();
    FormInvariants inv;
    inv.dim = f.dim();
    Rational D = f.discriminant();
    inv.discriminant_class = square_class(D, p);
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = i + 1; j < f.dim(); ++j) inv.hasse *= hilbert(f.coeffs()[i], f.coeffs()[j], p);
    if (f.dim() % 2 == 0) {
        Rational Dstar = (f.dim() / 2) % 2 == 1 ? -D : D;
        inv.d_star_class = square_class(Dstar, p);
    }
    inv.weil_gamma = weil_gamma_form(f);
    return inv;
}

// For the quaternary family returns a (a unit non-residue); nullopt otherwise.
inline std::optional<Rational> quaternary_parameter(const QuadraticForm& f) {
    if (f.dim() != 4) return std::nullopt;
    unsigned long p = f.prime();
    const auto& c = f.coeffs();
    Rational a = -c[1];
    if (c[0] != 1 || p_order(a, p) != 0 || square_class(a, p) != SquareClass::eps()) return std::nullopt;
    if (c[2] != -Rational(static_cast<long>(p)) || c[3] != a * static_cast<long>(p)) return std::nullopt;
    return a;
}

// For x1^2 - eta x2^2 with eta a non-square returns eta.
inline std::optional<Rational> binary_parameter(const QuadraticForm& f) {
    if (f.dim() != 2 || f.coeffs()[0] != 1) return std::nullopt;
    Rational eta = -f.coeffs()[1];
    if (square_class(eta, f.prime()) == SquareClass::one()) return std::nullopt;
    return eta;
}

// ---- rho factors --------------------------------------------------------------------

// Numeric evaluation of the Tate relation for pi_eta with phi = 1_{1+pZ_p}:
//   int phihat(x) pi(x) |x|^{s-1} dx  =  rho(pi, s) * int phi(x) pi(x)^{-1} |x|^{-s} dx.
// The right side is 1/p. The left side is a Riemann sum over the cells of p^{-1}Z_p of
// radius p^{-(depth-1)}; the cell at the origin is skipped. Returns rho / (sigma_p p^{s-1/2}).
inline std::complex<double> rho_ramified_ratio(unsigned long p, SquareClass eta, int depth, double s = 0.75) {
    if (!eta.odd) throw std::invalid_argument("ramified classes only");
    if (depth < 2 || depth > 12) throw std::invalid_argument("oracle depth out of range");
    std::int64_t M = Cyclotomic::order(p, depth);
    std::int64_t P = static_cast<std::int64_t>(p);
    double cell = std::pow(static_cast<double>(p), -(depth - 1));
    // residue characters mod p
    std::vector<int> leg(p, 0);
    for (unsigned long u = 1; u < p; ++u) leg[u] = legendre(Integer(u), p);
    std::vector<std::complex<double>> chi(p);
    for (unsigned long u = 0; u < p; ++u) chi[u] = std::polar(1.0, -2.0 * M_PI * static_cast<double>(u) / static_cast<double>(p));
    bool odd_e = ((p - 1) / 2) % 2 == 1;
    std::complex<double> lhs = 0;
    for (std::int64_t j = 1; j < M; ++j) {  // xi = j / p
        std::int64_t y = j;
        int v = -1;
        while (y % P == 0) {
            y /= P;
            ++v;
        }
        int u = static_cast<int>(y % P);
        // (eta, xi)_p with eta of odd order
        int sign = 1;
        if ((v & 1) && odd_e) sign = -sign;
        if ((v & 1) && eta.nonresidue) sign = -sign;
        if (leg[static_cast<std::size_t>(u)] == -1) sign = -sign;
        double mag = std::pow(static_cast<double>(p), -static_cast<double>(v) * (s - 1.0));
        lhs += static_cast<double>(sign) * mag * chi[static_cast<std::size_t>(j % P)] * cell;
    }
    // phihat = p^{-1} chi(-xi) on p^{-1}Z_p
    lhs /= static_cast<double>(p);
    std::complex<double> rho = lhs * static_cast<double>(p);
    std::complex<double> sigma = ExtScalar::sigma_is_imaginary(p) ? std::complex<double>(0, 1) : 1.0;
    return rho / (sigma * std::pow(static_cast<double>(p), s - 0.5));
}

inline int rho_sign_from_oracle(unsigned long p, SquareClass eta, int depth) {
    auto r = rho_ramified_ratio(p, eta, depth);
    for (int sgn : {1, -1})
        if (std::abs(r - static_cast<double>(sgn)) < 1e-6) return sgn;
    throw std::runtime_error("ramified rho sign unresolved for p = " + std::to_string(p) +
                             "; recalibrate the oracle");
}

// Sign of rho(pi_eta) for ramified eta: the checked-in table first, then a write-once cache.
inline int rho_ramified_sign(unsigned long p, SquareClass eta) {
    for (const auto& row : kRhoSignTable)
        if (row.prime == p) return eta.nonresidue ? row.sign_eps_p : row.sign_p;
    static std::mutex mu;
    static std::map<std::pair<unsigned long, bool>, int> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, eta.nonresidue);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int depth = p < 100 ? 4 : 3;
    return cache[key] = rho_sign_from_oracle(p, eta, depth);
}

// rho(pi_beta, s) as a rational function of t = p^{-s}.
inline RationalFunctionT rho_factor(SquareClass beta, unsigned long p) {
    ExtScalar one(p, 1);
    Rational ip = rpow(p, -1);
    if (!beta.odd) {
        Rational sg = beta.nonresidue ? 1 : -1;
        LaurentT num = LaurentT(one) + LaurentT::monomial(ExtScalar(p, sg * ip), -1);
        LaurentT den = LaurentT(one) + LaurentT::monomial(ExtScalar(p, sg), 1);
        return RationalFunctionT(num, den);
    }
    ExtScalar c = ExtScalar::sigma(p) * ExtScalar::sqrt_p(p) * Rational(rho_ramified_sign(p, beta)) * ip;
    return RationalFunctionT(LaurentT::monomial(c, -1));
}

}  // namespace padicqf
