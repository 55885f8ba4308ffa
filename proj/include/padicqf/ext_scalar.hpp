#pragma once

#include "cyclotomic.hpp"

#include <array>

namespace padicqf {

// Q(zeta_{p^r})[sigma_p, sqrt p].
//
// The Gauss sum g = sigma_p * sqrt(p) already lives in Q(zeta_p), so sqrt(p) is folded to
// g / sigma_p and every value is stored as a + b*sigma_p with cyclotomic a, b.
// For p = 1 mod 4, sigma_p = 1 and b is always zero.
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(Cyclotomic a) : p_(a.prime()), a_(std::move(a)) { b_ = Cyclotomic(p_, 0); }
    ExtScalar(unsigned long p, Rational q) : p_(p), a_(p, std::move(q)), b_(p, 0) {}
    ExtScalar(unsigned long p, long q) : ExtScalar(p, Rational(q)) {}

    static bool sigma_is_imaginary(unsigned long p) { return p % 4 == 3; }

    static ExtScalar sigma(unsigned long p) {
        if (!sigma_is_imaginary(p)) return ExtScalar(p, 1);
        return make(p, Cyclotomic(p, 0), Cyclotomic(p, 1));
    }

    static ExtScalar sqrt_p(unsigned long p) {
        if (!sigma_is_imaginary(p)) return ExtScalar(gauss_sum(p));
        return make(p, Cyclotomic(p, 0), -gauss_sum(p));
    }

    // p^{e/2} for any integer e.
    static ExtScalar half_power(unsigned long p, long e) {
        long q = e >= 0 ? e / 2 : -((-e + 1) / 2);
        ExtScalar r(p, rpow(p, q));
        if (e - 2 * q == 1) r = r * sqrt_p(p);
        return r;
    }

    static ExtScalar root(unsigned long p, int r, std::int64_t k) { return ExtScalar(Cyclotomic::root(p, r, k)); }

    // a00 + a10*sigma + a01*sqrt(p) + a11*sigma*sqrt(p)
    static ExtScalar from_components(unsigned long p, const Cyclotomic& a00, const Cyclotomic& a10,
                                     const Cyclotomic& a01, const Cyclotomic& a11) {
        ExtScalar s = sigma(p), r = sqrt_p(p);
        return ExtScalar(p, 0) + lift(p, a00) + lift(p, a10) * s + lift(p, a01) * r + lift(p, a11) * s * r;
    }

    unsigned long prime() const { return p_; }
    const Cyclotomic& real_part() const { return a_; }   // coefficient of 1
    const Cyclotomic& sigma_part() const { return b_; }  // coefficient of sigma_p
    int level() const { return std::max(a_.level(), b_.level()); }

    // (a00, a10, a01, a11) in the canonical folding: the sqrt(p) components are always zero.
    std::array<Cyclotomic, 4> components() const {
        return {a_, b_, Cyclotomic(p_, 0), Cyclotomic(p_, 0)};
    }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && a_.is_rational(); }
    const Rational& rational_value() const {
        if (!b_.is_zero()) throw std::logic_error("scalar is not rational");
        return a_.rational_value();
    }

    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
        return make(shared_prime(x, y), x.a_ + y.a_, x.b_ + y.b_);
    }
    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
        return make(shared_prime(x, y), x.a_ - y.a_, x.b_ - y.b_);
    }
    ExtScalar operator-() const { return make(p_, -a_, -b_); }

    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        unsigned long p = shared_prime(x, y);
        if (x.b_.is_zero() && y.b_.is_zero()) return make(p, x.a_ * y.a_, Cyclotomic(p, 0));
        Cyclotomic bd = x.b_ * y.b_;
        Cyclotomic re = sigma_is_imaginary(p) ? x.a_ * y.a_ - bd : x.a_ * y.a_ + bd;
        return make(p, re, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend ExtScalar operator*(const ExtScalar& x, const Rational& q) { return make(x.p_, x.a_ * q, x.b_ * q); }
    friend ExtScalar operator*(const Rational& q, const ExtScalar& x) { return x * q; }
    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) { return x * y.inverse(); }

    ExtScalar& operator+=(const ExtScalar& y) { return *this = *this + y; }
    ExtScalar& operator-=(const ExtScalar& y) { return *this = *this - y; }
    ExtScalar& operator*=(const ExtScalar& y) { return *this = *this * y; }

    ExtScalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (b_.is_zero()) return make(p_, a_.inverse(), Cyclotomic(p_, 0));
        // (a + b s)(a - b s) = a^2 + b^2 when s^2 = -1
        Cyclotomic n = (a_ * a_ + b_ * b_).inverse();
        return make(p_, a_ * n, -(b_ * n));
    }

    ExtScalar mul_root(int m, std::int64_t k) const { return make(p_, a_.mul_root(m, k), b_.mul_root(m, k)); }

    // Complex conjugation under the standard embedding.
    ExtScalar conj() const {
        if (sigma_is_imaginary(p_)) return make(p_, a_.conj(), -b_.conj());
        return make(p_, a_.conj(), b_.conj());
    }

    friend bool operator==(const ExtScalar& x, const ExtScalar& y) {
        if (x.p_ && y.p_ && x.p_ != y.p_) throw prime_mismatch();
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

    // zeta -> exp(2 pi i / p^r), sigma -> i or 1, sqrt(p) -> positive root.
    std::complex<double> to_complex() const {
        std::complex<double> s = sigma_is_imaginary(p_) ? std::complex<double>(0, 1) : 1.0;
        return a_.to_complex() + s * b_.to_complex();
    }

    std::size_t hash() const { return a_.hash() * 31u + b_.hash(); }

private:
    unsigned long p_ = 0;
    Cyclotomic a_, b_;

    static ExtScalar make(unsigned long p, Cyclotomic a, Cyclotomic b) {
        ExtScalar r;
        r.p_ = p;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        return r;
    }
    static ExtScalar lift(unsigned long p, const Cyclotomic& c) {
        if (c.prime() && c.prime() != p) throw prime_mismatch();
        return ExtScalar(Cyclotomic(p, 0) + c);
    }
    static unsigned long shared_prime(const ExtScalar& x, const ExtScalar& y) {
        if (x.p_ && y.p_ && x.p_ != y.p_) throw prime_mismatch();
        return x.p_ ? x.p_ : y.p_;
    }
};

inline bool is_zero(const ExtScalar& x) { return x.is_zero(); }
inline ExtScalar inv(const ExtScalar& x) { return x.inverse(); }
inline ExtScalar conj(const ExtScalar& x) { return x.conj(); }
inline ExtScalar zero_like(const ExtScalar& x) { return ExtScalar(x.prime(), 0); }
inline ExtScalar one_like(const ExtScalar& x) { return ExtScalar(x.prime(), 1); }

}  // namespace padicqf
