#pragma once

#include "rational.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace padicqf {

// Elements of Q(zeta_{p^r}) in the power basis zeta^k, 0 <= k < p^{r-1}(p-1).
// A default-constructed value is a prime-less zero that adapts to the other operand.
class Cyclotomic {
public:
    Cyclotomic() : c_(1) {}
    Cyclotomic(unsigned long p, Rational q) : p_(p), c_{std::move(q)} {}
    Cyclotomic(unsigned long p, long q) : p_(p), c_{Rational(q)} {}

    static std::int64_t order(unsigned long p, int r) {
        std::int64_t m = 1;
        for (int i = 0; i < r; ++i) m *= static_cast<std::int64_t>(p);
        return m;
    }
    static std::size_t basis_size(unsigned long p, int r) {
        return r == 0 ? 1 : static_cast<std::size_t>(order(p, r - 1) * static_cast<std::int64_t>(p - 1));
    }

    // zeta_{p^r}^k, with k taken modulo p^r.
    static Cyclotomic root(unsigned long p, int r, std::int64_t k) {
        std::int64_t m = order(p, r);
        std::vector<Rational> buf(static_cast<std::size_t>(m));
        buf[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
        return from_raw(p, r, std::move(buf));
    }

    // Build from coefficients indexed by exponent modulo p^r (size p^r); reduces and minimizes.
    static Cyclotomic from_raw(unsigned long p, int r, std::vector<Rational> buf) {
        if (r == 0) return Cyclotomic(p, buf.empty() ? Rational(0) : buf[0]);
        std::int64_t m = order(p, r), step = m / static_cast<std::int64_t>(p);
        std::int64_t phi = m - step;
        for (std::int64_t e = phi; e < m; ++e) {
            const Rational c = buf[static_cast<std::size_t>(e)];
            if (padicqf::is_zero(c)) continue;
            std::int64_t j = e - phi;
            for (unsigned long i = 0; i + 1 < p; ++i)
                buf[static_cast<std::size_t>(j + static_cast<std::int64_t>(i) * step)] -= c;
        }
        buf.resize(static_cast<std::size_t>(phi));
        Cyclotomic out;
        out.p_ = p;
        out.level_ = r;
        out.c_ = std::move(buf);
        out.minimize();
        return out;
    }

    // Canonical coefficients at an explicit (possibly larger) level.
    static Cyclotomic from_basis(unsigned long p, int r, std::vector<Rational> coeffs) {
        if (coeffs.size() != basis_size(p, r)) throw std::invalid_argument("cyclotomic basis size mismatch");
        Cyclotomic out;
        out.p_ = p;
        out.level_ = r;
        out.c_ = std::move(coeffs);
        out.minimize();
        return out;
    }

    unsigned long prime() const { return p_; }
    int level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (!padicqf::is_zero(q)) return false;
        return true;
    }
    bool is_rational() const { return level_ == 0; }
    const Rational& rational_value() const {
        if (level_ != 0) throw std::logic_error("cyclotomic value is not rational");
        return c_[0];
    }

    // Coefficients after re-expressing at level L >= level().
    std::vector<Rational> lifted(int L) const { return lifted(L, p_); }

    // p is used when this value is a prime-less zero.
    std::vector<Rational> lifted(int L, unsigned long p) const {
        if (L < level_) throw std::logic_error("cannot lower cyclotomic level");
        if (L == level_) return c_;
        if (p_) p = p_;
        std::vector<Rational> out(basis_size(p, L));
        std::int64_t stride = order(p, L - level_);
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!padicqf::is_zero(c_[k])) out[static_cast<std::size_t>(static_cast<std::int64_t>(k) * stride)] = c_[k];
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return combine(a, b, false); }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return combine(a, b, true); }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
        if (padicqf::is_zero(q)) return Cyclotomic(a.p_, 0);
        Cyclotomic r = a;
        for (auto& x : r.c_) x *= q;
        return r;
    }
    friend Cyclotomic operator*(const Rational& q, const Cyclotomic& a) { return a * q; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        unsigned long p = shared_prime(a, b);
        if (a.level_ == 0) return with_prime(b * a.c_[0], p);
        if (b.level_ == 0) return with_prime(a * b.c_[0], p);
        int L = std::max(a.level_, b.level_);
        auto x = a.lifted(L, p), y = b.lifted(L, p);
        std::int64_t m = order(p, L);
        std::vector<Rational> buf(static_cast<std::size_t>(m));
        Rational tmp;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (padicqf::is_zero(x[i])) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (padicqf::is_zero(y[j])) continue;
                std::size_t e = (i + j) % static_cast<std::size_t>(m);
                mpq_mul(tmp.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
                buf[e] += tmp;
            }
        }
        return from_raw(p, L, std::move(buf));
    }

    // this * zeta_{p^m}^k
    Cyclotomic mul_root(int m, std::int64_t k) const {
        if (p_ == 0) return *this;
        int L = std::max(level_, m);
        std::int64_t M = order(p_, L);
        std::int64_t shift = (((k % order(p_, m)) + order(p_, m)) % order(p_, m)) * order(p_, L - m);
        if (shift == 0) return *this;
        std::int64_t stride = order(p_, L - level_);
        std::vector<Rational> buf(static_cast<std::size_t>(M));
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!padicqf::is_zero(c_[i]))
                buf[static_cast<std::size_t>((static_cast<std::int64_t>(i) * stride + shift) % M)] = c_[i];
        return from_raw(p_, L, std::move(buf));
    }

    Cyclotomic conj() const {
        if (level_ == 0) return *this;
        std::int64_t M = order(p_, level_);
        std::vector<Rational> buf(static_cast<std::size_t>(M));
        for (std::size_t i = 0; i < c_.size(); ++i)
            buf[static_cast<std::size_t>((M - static_cast<std::int64_t>(i)) % M)] = c_[i];
        return from_raw(p_, level_, std::move(buf));
    }

    Cyclotomic inverse() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw prime_mismatch();
        return a.level_ == b.level_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        std::complex<double> s = 0;
        double m = static_cast<double>(order(p_ ? p_ : 1, level_));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (padicqf::is_zero(c_[k])) continue;
            double ang = 2.0 * M_PI * static_cast<double>(k) / m;
            s += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return s;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(level_);
        for (const auto& q : c_) {
            h = h * 1000003u ^ std::hash<long>()(mpz_get_si(q.get_num_mpz_t()));
            h = h * 1000003u ^ std::hash<long>()(mpz_get_si(q.get_den_mpz_t()));
        }
        return h;
    }

private:
    unsigned long p_ = 0;
    int level_ = 0;
    std::vector<Rational> c_;

    static Cyclotomic with_prime(Cyclotomic x, unsigned long p) {
        if (x.p_ == 0) x.p_ = p;
        return x;
    }

    static unsigned long shared_prime(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw prime_mismatch();
        return a.p_ ? a.p_ : b.p_;
    }

    static Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
        unsigned long p = shared_prime(a, b);
        int L = std::max(a.level_, b.level_);
        auto x = a.lifted(L, p), y = b.lifted(L, p);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (subtract) x[i] -= y[i];
            else x[i] += y[i];
        }
        Cyclotomic out;
        out.p_ = p;
        out.level_ = L;
        out.c_ = std::move(x);
        out.minimize();
        return out;
    }

    void minimize() {
        while (level_ >= 1) {
            for (std::size_t k = 0; k < c_.size(); ++k)
                if (k % p_ != 0 && !padicqf::is_zero(c_[k])) return;
            std::vector<Rational> down(basis_size(p_, level_ - 1));
            for (std::size_t k = 0; k < down.size(); ++k) down[k] = c_[k * p_];
            c_ = std::move(down);
            --level_;
        }
    }
};

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

// Returns (q, r) with a = q*b + r.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    Rational lead = inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() * lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace detail

inline Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (level_ == 0) return Cyclotomic(p_, 1 / c_[0]);
    // Extended Euclid against the p^r-th cyclotomic polynomial.
    std::int64_t step = order(p_, level_ - 1);
    detail::QPoly phi(static_cast<std::size_t>(step * static_cast<std::int64_t>(p_ - 1) + 1));
    for (unsigned long i = 0; i < p_; ++i) phi[static_cast<std::size_t>(step * static_cast<std::int64_t>(i))] = 1;
    detail::QPoly r0 = phi, r1 = c_, s0, s1{Rational(1)};
    detail::trim(r1);
    while (r1.size() > 1) {
        auto [q, r] = detail::divmod(r0, r1);
        auto s = detail::sub(s0, detail::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational c = inv(r1.at(0));
    std::vector<Rational> buf(static_cast<std::size_t>(order(p_, level_)));
    auto red = detail::divmod(s1, phi).second;
    for (std::size_t i = 0; i < red.size(); ++i) buf[i] = red[i] * c;
    return from_raw(p_, level_, std::move(buf));
}

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }
inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
inline Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic(x.prime(), 0); }
inline Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic(x.prime(), 1); }

// Sum_{y mod p} zeta_p^{y^2}.
inline Cyclotomic gauss_sum(unsigned long p) {
    std::vector<Rational> buf(p);
    for (unsigned long y = 0; y < p; ++y) buf[(y * y) % p] += 1;
    return Cyclotomic::from_raw(p, 1, std::move(buf));
}

// Raw accumulator at a fixed level; used by the discrete Fourier sums.
class CyclotomicAccumulator {
public:
    CyclotomicAccumulator(unsigned long p, int L)
        : p_(p), L_(L), m_(Cyclotomic::order(p, L)), buf_(static_cast<std::size_t>(m_)) {}

    // += x * zeta_{p^L}^shift, x at level <= L.
    void add(const Cyclotomic& x, std::int64_t shift) {
        std::int64_t stride = Cyclotomic::order(p_, L_ - x.level());
        shift = ((shift % m_) + m_) % m_;
        const auto& c = x.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!is_zero(c[k])) buf_[static_cast<std::size_t>((static_cast<std::int64_t>(k) * stride + shift) % m_)] += c[k];
    }

    Cyclotomic take() {
        Cyclotomic r = Cyclotomic::from_raw(p_, L_, std::move(buf_));
        buf_.assign(static_cast<std::size_t>(m_), Rational(0));
        return r;
    }

private:
    unsigned long p_;
    int L_;
    std::int64_t m_;
    std::vector<Rational> buf_;
};

}  // namespace padicqf
