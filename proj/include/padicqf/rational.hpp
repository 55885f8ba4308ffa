#pragma once

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>

namespace padicqf {

using Integer = mpz_class;
using Rational = mpq_class;

// Orders of zero are reported as this value.
inline constexpr int kOrdInfinity = INT_MAX;

class prime_mismatch : public std::invalid_argument {
public:
    prime_mismatch() : std::invalid_argument("prime mismatch") {}
};

class unsupported_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "a", "a/b" and "-a/b" (whitespace trimmed).
inline Rational parse_rational(std::string s) {
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty rational");
    s = s.substr(first, last - first + 1);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Shorter form used in human-readable output: "3", "-1/25".
inline std::string to_short_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_string(q);
}

inline Integer ipow(unsigned long p, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// p^e for any integer e.
inline Rational rpow(unsigned long p, long e) {
    if (e >= 0) return Rational(ipow(p, static_cast<unsigned long>(e)));
    return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inv(const Rational& q) {
    if (is_zero(q)) throw std::domain_error("division by zero");
    return 1 / q;
}
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational conj(const Rational& q) { return q; }

inline bool is_odd_prime(unsigned long p) {
    if (p < 3) return false;
    return mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) > 0;
}

inline void require_odd_prime(unsigned long p) {
    if (p == 2) throw unsupported_input("p = 2 is not supported");
    if (!is_odd_prime(p)) throw std::invalid_argument("not an odd prime: " + std::to_string(p));
}

}  // namespace padicqf
