#pragma once

#include "ext_scalar.hpp"

#include <map>
#include <sstream>

namespace padicqf {

template <class K>
K kpow(const K& x, long e) {
    K base = e >= 0 ? x : inv(x);
    K r = one_like(x);
    for (long n = e >= 0 ? e : -e; n > 0; n >>= 1) {
        if (n & 1) r = r * base;
        if (n > 1) base = base * base;
    }
    return r;
}

// Finite sums  sum_k c_k t^k  with k of either sign.
template <class K>
class LaurentPoly {
public:
    using Terms = std::map<int, K>;

    LaurentPoly() = default;
    explicit LaurentPoly(const K& c, int deg = 0) {
        if (!is_zero_scalar(c)) terms_.emplace(deg, c);
    }
    static LaurentPoly monomial(const K& c, int deg) { return LaurentPoly(c, deg); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    K coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? K() : it->second;
    }

    void add_term(int k, const K& c) {
        if (is_zero_scalar(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero_scalar(it->second)) terms_.erase(it);
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k, c);
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
        return a;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [i, x] : a.terms_)
            for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const K& s) {
        LaurentPoly r;
        if (is_zero_scalar(s)) return r;
        for (const auto& [k, c] : a.terms_) r.add_term(k, c * s);
        return r;
    }
    friend LaurentPoly operator*(const K& s, const LaurentPoly& a) { return a * s; }
    LaurentPoly& operator+=(const LaurentPoly& b) {
        for (const auto& [k, c] : b.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& b) {
        for (const auto& [k, c] : b.terms_) add_term(k, -c);
        return *this;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [k, c] : a.terms_) {
            if (k != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // t^k * this
    LaurentPoly shift(int k) const {
        LaurentPoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
        return r;
    }

    K eval(const K& t0) const {
        K s{};
        if (terms_.empty()) return s;
        for (const auto& [k, c] : terms_) s = s + c * kpow(t0, k);
        return s;
    }

    // t -> c * t^sign
    LaurentPoly substitute(const K& c, int sign) const {
        LaurentPoly r;
        for (const auto& [k, a] : terms_) r.add_term(sign * k, a * kpow(c, k));
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using K2 = decltype(f(std::declval<const K&>()));
        LaurentPoly<K2> r;
        for (const auto& [k, c] : terms_) r.add_term(k, f(c));
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& [k, c] : terms_) f(k, c);
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& [k, c] : terms_) h = h * 131u + static_cast<std::size_t>(k) * 7919u + scalar_hash(c);
        return h;
    }

private:
    Terms terms_;

    static bool is_zero_scalar(const K& c) {
        using padicqf::is_zero;
        return is_zero(c);
    }
    static std::size_t scalar_hash(const K& c) {
        if constexpr (std::is_same_v<K, Rational>) return std::hash<long>()(mpz_get_si(c.get_num_mpz_t()));
        else return c.hash();
    }
};

template <class K>
bool is_zero(const LaurentPoly<K>& x) { return x.is_zero(); }

// Pretty printer used by text output.
inline std::string scalar_text(const Rational& q) { return to_short_string(q); }

inline std::string scalar_text(const Cyclotomic& c) {
    if (c.is_rational()) return to_short_string(c.rational_value());
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
        const Rational& q = c.coeffs()[k];
        if (is_zero(q)) continue;
        if (!first) os << " + ";
        first = false;
        os << to_short_string(q);
        if (k) os << "*z" << Cyclotomic::order(c.prime(), c.level()) << "^" << k;
    }
    return os.str();
}

inline std::string scalar_text(const ExtScalar& x) {
    if (x.sigma_part().is_zero()) return scalar_text(x.real_part());
    std::string s = "(" + scalar_text(x.sigma_part()) + ")*sigma";
    if (x.real_part().is_zero()) return s;
    return "(" + scalar_text(x.real_part()) + ") + " + s;
}

template <class K>
std::string to_text(const LaurentPoly<K>& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::string out;
    f.for_each([&](int k, const K& c) {
        if (!out.empty()) out += " + ";
        std::string cs = scalar_text(c);
        bool compound = cs.find(' ') != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (k == 0) out += cs;
        else out += cs + "*" + var + (k == 1 ? "" : "^" + std::to_string(k));
    });
    return out;
}

}  // namespace padicqf
