#pragma once

#include "laurent.hpp"

namespace padicqf {

class pole_error : public std::domain_error {
public:
    pole_error() : std::domain_error("pole at evaluation point") {}
};

namespace detail {

template <class K>
using Dense = std::vector<K>;

template <class K>
void dtrim(Dense<K>& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

template <class K>
Dense<K> to_dense(const LaurentPoly<K>& f) {  // f must have min_degree >= 0
    Dense<K> d(f.is_zero() ? 0 : static_cast<std::size_t>(f.max_degree() + 1));
    f.for_each([&](int k, const K& c) { d[static_cast<std::size_t>(k)] = c; });
    return d;
}

template <class K>
LaurentPoly<K> from_dense(const Dense<K>& d, int shift = 0) {
    LaurentPoly<K> f;
    for (std::size_t i = 0; i < d.size(); ++i) f.add_term(static_cast<int>(i) + shift, d[i]);
    return f;
}

template <class K>
std::pair<Dense<K>, Dense<K>> ddivmod(Dense<K> a, const Dense<K>& b) {
    dtrim(a);
    Dense<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    K lead = inv(b.back());
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t s = a.size() - b.size();
        K c = a.back() * lead;
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + s] = a[i + s] - c * b[i];
        a.pop_back();
        dtrim(a);
    }
    return {q, a};
}

template <class K>
Dense<K> dgcd(Dense<K> a, Dense<K> b) {
    dtrim(a);
    dtrim(b);
    while (!b.empty()) {
        auto r = ddivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

// num / den with den an ordinary polynomial, den(0) = 1, and gcd(num, den) = 1.
template <class K>
class RationalFunction {
public:
    using Poly = LaurentPoly<K>;

    RationalFunction() : den_(one()) {}
    RationalFunction(const K& c) : num_(c), den_(one()) {}
    RationalFunction(const Poly& num) : num_(num), den_(one()) {}
    RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) { canonicalize(); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.max_degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ + b.num_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ - b.num_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ * b.num_);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Evaluation of the canonical (cancelled) form.
    K eval(const K& t0) const {
        if (padicqf::is_zero(t0) && num_.min_degree() < 0) throw pole_error();
        K d = den_.eval(t0);
        if (padicqf::is_zero(d)) throw pole_error();
        return num_.eval(t0) * inv(d);
    }

    // Common factors are cancelled at construction, so a removable singularity of the
    // unreduced quotient evaluates to its limit here.
    K value_after_cancellation(const K& t0) const { return eval(t0); }

    bool has_pole_at(const K& t0) const {
        if (padicqf::is_zero(t0)) return num_.min_degree() < 0;
        return padicqf::is_zero(den_.eval(t0));
    }

    // t -> c * t^sign
    RationalFunction substitute(const K& c, int sign) const {
        return RationalFunction(num_.substitute(c, sign), den_.substitute(c, sign));
    }

    template <class F>
    auto map(F&& f) const {
        using K2 = decltype(f(std::declval<const K&>()));
        return RationalFunction<K2>(num_.map(f), den_.map(f));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_laurent()) return to_text(num_, var);
        return "(" + to_text(num_, var) + ")/(" + to_text(den_, var) + ")";
    }

private:
    Poly num_, den_;

    static Poly one() {
        if constexpr (std::is_same_v<K, Rational>) return Poly(Rational(1));
        else return Poly(K(0, 1));
    }

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero rational function");
        if (num_.is_zero()) {
            den_ = Poly(one_like(den_.terms().begin()->second));
            return;
        }
        int k = den_.min_degree();
        num_ = num_.shift(-k);
        den_ = den_.shift(-k);
        int m = num_.min_degree();
        auto N = detail::to_dense(num_.shift(-m));
        auto D = detail::to_dense(den_);
        if (D.size() > 1 && N.size() > 1) {
            auto g = detail::dgcd(N, D);
            if (g.size() > 1) {
                N = detail::ddivmod(N, g).first;
                D = detail::ddivmod(D, g).first;
            }
        }
        K c = inv(D[0]);
        for (auto& x : N) x = x * c;
        for (auto& x : D) x = x * c;
        num_ = detail::from_dense(N, m);
        den_ = detail::from_dense(D);
    }
};

template <class K>
bool is_zero(const RationalFunction<K>& f) { return f.is_zero(); }

using RationalFunctionT = RationalFunction<ExtScalar>;
using LaurentT = LaurentPoly<ExtScalar>;

inline LaurentT to_ext(unsigned long p, const LaurentPoly<Rational>& f) {
    return f.map([p](const Rational& q) { return ExtScalar(p, q); });
}

inline RationalFunctionT to_ext(unsigned long p, const RationalFunction<Rational>& f) {
    return RationalFunctionT(to_ext(p, f.numerator()), to_ext(p, f.denominator()));
}

}  // namespace padicqf
