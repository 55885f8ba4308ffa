#pragma once

#include "padic.hpp"
#include "ratfun.hpp"

#include <map>
#include <optional>

namespace padicqf {

inline constexpr int kDefaultDepthBound = 64;
// Largest dense grid / refinement the engine will materialize.
inline constexpr std::int64_t kMaxCells = std::int64_t(1) << 22;

class depth_exceeded : public unsupported_input {
public:
    using unsupported_input::unsupported_input;
};

namespace detail {

inline std::int64_t checked_pow(unsigned long p, long e) {
    std::int64_t r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > kMaxCells / static_cast<std::int64_t>(p)) throw depth_exceeded("refinement exceeds the cell budget");
        r *= static_cast<std::int64_t>(p);
    }
    return r;
}

template <class S>
S scale(const S& x, const Rational& q) {
    return x * q;
}

template <class K>
LaurentPoly<K> scale(const LaurentPoly<K>& x, const Rational& q) {
    return x.map([&q](const K& c) { return c * q; });
}

}  // namespace detail

// Locally constant compactly supported function: a sum of c_B 1_B over disjoint balls of
// one common radius p^gamma. Keys are canonical centers at that radius.
template <class S>
class TestFunction {
public:
    using Key = PVector;
    using Terms = std::map<Key, S>;

    TestFunction() = default;
    TestFunction(unsigned long p, std::size_t n, int gamma = 0) : p_(p), n_(n), gamma_(gamma) {}

    static TestFunction from_terms(unsigned long p, std::size_t n, const std::vector<std::pair<Ball, S>>& raw,
                                   int depth_bound = kDefaultDepthBound) {
        if (raw.empty()) return TestFunction(p, n);
        int g = raw.front().first.gamma;
        for (const auto& [b, c] : raw) {
            if (b.dim() != n) throw std::invalid_argument("dimension mismatch");
            g = std::min(g, b.gamma);
        }
        TestFunction out(p, n, g);
        for (const auto& [b, c] : raw) {
            if (b.gamma - g > depth_bound) throw depth_exceeded("depth bound exceeded");
            out.add_refined(b, c);
        }
        return out;
    }

    static TestFunction indicator(unsigned long p, const Ball& b, const S& c) { return from_terms(p, b.dim(), {{b, c}}); }

    unsigned long prime() const { return p_; }
    std::size_t dim() const { return n_; }
    int gamma() const { return gamma_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Ball ball(const Key& k) const { return Ball{k, gamma_}; }

    Key key_of(const PVector& x) const {
        Key k(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) k[i] = canonical_coord(x[i], gamma_, p_);
        return k;
    }

    S eval(const PVector& x) const {
        auto it = terms_.find(key_of(x));
        return it == terms_.end() ? S() : it->second;
    }

    S integral() const {
        S s{};
        Rational vol = rpow(p_, static_cast<long>(gamma_) * static_cast<long>(n_));
        for (const auto& [k, c] : terms_) s = s + c;
        return detail::scale(s, vol);
    }

    // Smallest Gamma >= gamma with the support inside B_Gamma(0).
    int enclosing_radius() const {
        int G = gamma_;
        for (const auto& [k, c] : terms_) G = std::max(G, enclosing_radius_of(k));
        return G;
    }

    // Same function on balls of radius p^g, g <= gamma().
    TestFunction refined(int g) const {
        if (g > gamma_) throw std::invalid_argument("refinement must not coarsen");
        if (g == gamma_ || terms_.empty()) {
            TestFunction r = *this;
            r.gamma_ = g;
            return r;
        }
        TestFunction out(p_, n_, g);
        for (const auto& [k, c] : terms_) out.add_refined(Ball{k, gamma_}, c);
        return out;
    }

    // Merges sibling cells while the function stays representable on a coarser radius.
    TestFunction coarsened() const {
        TestFunction cur = *this;
        while (!cur.terms_.empty()) {
            std::int64_t kids = detail::checked_pow(p_, static_cast<long>(n_));
            std::map<Key, std::pair<S, std::int64_t>> parents;
            bool ok = true;
            for (const auto& [k, c] : cur.terms_) {
                Key pk(n_);
                for (std::size_t i = 0; i < n_; ++i) pk[i] = canonical_coord(k[i], cur.gamma_ + 1, p_);
                auto it = parents.find(pk);
                if (it == parents.end()) parents.emplace(pk, std::make_pair(c, std::int64_t(1)));
                else if (!(it->second.first == c)) {
                    ok = false;
                    break;
                } else ++it->second.second;
            }
            if (!ok) break;
            for (const auto& [pk, v] : parents)
                if (v.second != kids) ok = false;
            if (!ok) break;
            TestFunction next(p_, n_, cur.gamma_ + 1);
            for (auto& [pk, v] : parents) next.terms_.emplace(pk, v.first);
            cur = std::move(next);
        }
        return cur;
    }

    friend TestFunction operator+(const TestFunction& a, const TestFunction& b) { return combine(a, b, 1); }
    friend TestFunction operator-(const TestFunction& a, const TestFunction& b) { return combine(a, b, -1); }
    friend TestFunction operator*(const TestFunction& a, const S& s) {
        TestFunction r(a.p_, a.n_, a.gamma_);
        for (const auto& [k, c] : a.terms_) r.add_at(k, c * s);
        return r;
    }
    friend TestFunction operator*(const TestFunction& a, const Rational& q) {
        TestFunction r(a.p_, a.n_, a.gamma_);
        for (const auto& [k, c] : a.terms_) r.add_at(k, detail::scale(c, q));
        return r;
    }

    friend bool operator==(const TestFunction& a, const TestFunction& b) {
        if (a.p_ != b.p_ || a.n_ != b.n_) return false;
        if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
        if (a.gamma_ != b.gamma_) {
            int g = std::min(a.gamma_, b.gamma_);
            return a.refined(g).terms_ == b.refined(g).terms_;
        }
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TestFunction& a, const TestFunction& b) { return !(a == b); }

    // x -> phi(x + a)
    TestFunction translated(const PVector& a) const {
        TestFunction r(p_, n_, gamma_);
        for (const auto& [k, c] : terms_) {
            Key nk(n_);
            for (std::size_t i = 0; i < n_; ++i) nk[i] = canonical_coord(k[i] - a[i], gamma_, p_);
            r.add_at(nk, c);
        }
        return r;
    }

    // x -> phi(-x)
    TestFunction reflected() const {
        TestFunction r(p_, n_, gamma_);
        for (const auto& [k, c] : terms_) {
            Key nk(n_);
            for (std::size_t i = 0; i < n_; ++i) nk[i] = canonical_coord(-k[i], gamma_, p_);
            r.add_at(nk, c);
        }
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using S2 = std::decay_t<decltype(f(std::declval<const S&>()))>;
        TestFunction<S2> r(p_, n_, gamma_);
        for (const auto& [k, c] : terms_) r.add_at(k, f(c));
        return r;
    }

    // Adds c on the cell with canonical key k (must be canonical at gamma()).
    void add_at(const Key& k, const S& c) {
        using padicqf::is_zero;
        if (is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second)) terms_.erase(it);
    }

    void add_ball(const Ball& b, const S& c) {
        if (terms_.empty() && b.gamma < gamma_) gamma_ = b.gamma;
        if (b.gamma < gamma_) *this = refined(b.gamma);
        add_refined(b, c);
    }

private:
    unsigned long p_ = 3;
    std::size_t n_ = 1;
    int gamma_ = 0;
    Terms terms_;

    int enclosing_radius_of(const Key& k) const {
        int v = v_order(k, p_);
        return v == kOrdInfinity ? gamma_ : std::max(gamma_, -v);
    }

    // Adds c * 1_b for a ball with b.gamma >= gamma_.
    void add_refined(const Ball& b, const S& c) {
        using padicqf::is_zero;
        if (is_zero(c)) return;
        long d = b.gamma - gamma_;
        if (d < 0) throw std::logic_error("ball finer than the canonical radius");
        Key base(n_);
        for (std::size_t i = 0; i < n_; ++i) base[i] = canonical_coord(b.center[i], b.gamma, p_);
        if (d == 0) {
            add_at(base, c);
            return;
        }
        std::int64_t m = detail::checked_pow(p_, d);
        detail::checked_pow(p_, d * static_cast<long>(n_));
        Rational step = rpow(p_, -b.gamma);
        std::vector<std::int64_t> idx(n_, 0);
        while (true) {
            Key k(n_);
            for (std::size_t i = 0; i < n_; ++i) k[i] = canonical_coord(base[i] + step * Rational(static_cast<long>(idx[i])), gamma_, p_);
            add_at(k, c);
            std::size_t i = 0;
            while (i < n_ && ++idx[i] == m) idx[i++] = 0;
            if (i == n_) break;
        }
    }

    static TestFunction combine(const TestFunction& a, const TestFunction& b, int sign) {
        if (a.p_ != b.p_) throw prime_mismatch();
        if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
        if (a.terms_.empty()) return sign > 0 ? b : b * Rational(-1);
        if (b.terms_.empty()) return a;
        int g = std::min(a.gamma_, b.gamma_);
        TestFunction r = a.refined(g);
        TestFunction bb = b.refined(g);
        for (const auto& [k, c] : bb.terms_) r.add_at(k, sign > 0 ? c : detail::scale(c, Rational(-1)));
        return r;
    }
};

using TestFunctionE = TestFunction<ExtScalar>;
using TestFunctionL = TestFunction<LaurentT>;

// ---- Fourier transform -----------------------------------------------------------------

namespace detail {

// One-dimensional passes of sum_j v[j] zeta_M^{sign j k} over a dense (p^L)^n grid.
inline void dft_inplace(std::vector<ExtScalar>& v, unsigned long p, std::size_t n, int L, int sign, int level) {
    std::int64_t M = Cyclotomic::order(p, L);
    std::int64_t stride = 1;
    std::int64_t N = static_cast<std::int64_t>(v.size());
    std::vector<ExtScalar> line(static_cast<std::size_t>(M));
    CyclotomicAccumulator ra(p, level), sa(p, level);
    std::int64_t up = Cyclotomic::order(p, level - L);  // zeta_M = zeta_{p^level}^up
    for (std::size_t axis = 0; axis < n; ++axis) {
        for (std::int64_t base = 0; base < N; ++base) {
            if ((base / stride) % M != 0) continue;
            bool any = false;
            for (std::int64_t j = 0; j < M; ++j) {
                line[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(base + j * stride)];
                any = any || !line[static_cast<std::size_t>(j)].is_zero();
            }
            if (!any) continue;
            for (std::int64_t k = 0; k < M; ++k) {
                bool has_sigma = false;
                for (std::int64_t j = 0; j < M; ++j) {
                    const ExtScalar& x = line[static_cast<std::size_t>(j)];
                    if (x.is_zero()) continue;
                    std::int64_t e = sign * ((j * k) % M) * up;
                    ra.add(x.real_part(), e);
                    if (!x.sigma_part().is_zero()) {
                        sa.add(x.sigma_part(), e);
                        has_sigma = true;
                    }
                }
                ExtScalar out(ra.take());
                if (has_sigma) out = out + ExtScalar(sa.take()) * ExtScalar::sigma(p);
                v[static_cast<std::size_t>(base + k * stride)] = out;
            }
        }
        stride *= M;
    }
}

inline int max_level(const TestFunctionE& f) {
    int r = 0;
    for (const auto& [k, c] : f.terms()) r = std::max(r, c.level());
    return r;
}

}  // namespace detail

// sign = -1: F[phi](xi) = int chi(-xi.x) phi(x) dx;  sign = +1: the inverse transform.
inline TestFunctionE fourier(const TestFunctionE& phi, int sign = -1) {
    unsigned long p = phi.prime();
    std::size_t n = phi.dim();
    if (phi.is_zero()) return TestFunctionE(p, n, -phi.gamma());
    int g = phi.gamma(), G = phi.enclosing_radius(), L = G - g;
    std::int64_t M = detail::checked_pow(p, L);
    std::int64_t N = detail::checked_pow(p, static_cast<long>(L) * static_cast<long>(n));
    std::vector<ExtScalar> grid(static_cast<std::size_t>(N), ExtScalar(p, 0));
    Rational scaleG = rpow(p, G);
    for (const auto& [k, c] : phi.terms()) {
        std::int64_t idx = 0, mul = 1;
        for (std::size_t i = 0; i < n; ++i) {
            Rational j = k[i] * scaleG;
            idx += mpz_get_si(j.get_num_mpz_t()) * mul;
            mul *= M;
        }
        grid[static_cast<std::size_t>(idx)] = c;
    }
    int level = std::max(L, detail::max_level(phi));
    detail::dft_inplace(grid, p, n, L, sign, level);
    Rational vol = rpow(p, static_cast<long>(g) * static_cast<long>(n));
    TestFunctionE out(p, n, -G);
    Rational pg = rpow(p, g);
    for (std::int64_t idx = 0; idx < N; ++idx) {
        const ExtScalar& c = grid[static_cast<std::size_t>(idx)];
        if (c.is_zero()) continue;
        PVector key(n);
        std::int64_t r = idx;
        for (std::size_t i = 0; i < n; ++i) {
            key[i] = pg * Rational(static_cast<long>(r % M));
            r /= M;
        }
        out.add_at(key, c * vol);
    }
    return out;
}

inline TestFunctionE inverse_fourier(const TestFunctionE& g) { return fourier(g, +1); }

// Coefficientwise in t.
inline TestFunctionL fourier(const TestFunctionL& phi, int sign = -1) {
    std::map<int, TestFunctionE> parts;
    for (const auto& [k, c] : phi.terms())
        c.for_each([&](int d, const ExtScalar& x) {
            auto it = parts.try_emplace(d, phi.prime(), phi.dim(), phi.gamma()).first;
            it->second.add_at(k, x);
        });
    TestFunctionL out(phi.prime(), phi.dim(), -phi.enclosing_radius());
    for (const auto& [d, part] : parts) {
        TestFunctionE fp = fourier(part, sign);
        int deg = d;
        out = out + fp.map([deg](const ExtScalar& x) { return LaurentT::monomial(x, deg); });
    }
    return out;
}

// ---- Lizorkin spaces, products, convolution ---------------------------------------------

enum class LizorkinSpace { Psi, Phi };

template <class S>
bool lizorkin_check(const TestFunction<S>& phi, LizorkinSpace space) {
    using padicqf::is_zero;
    if (space == LizorkinSpace::Psi) return is_zero(phi.eval(PVector(phi.dim(), Rational(0))));
    return is_zero(phi.integral());
}

template <class S>
TestFunction<S> pointwise_product(const TestFunction<S>& a, const TestFunction<S>& b) {
    if (a.prime() != b.prime()) throw prime_mismatch();
    TestFunction<S> out(a.prime(), a.dim(), std::min(a.gamma(), b.gamma()));
    if (a.is_zero() || b.is_zero()) return out;
    auto x = a.refined(out.gamma()), y = b.refined(out.gamma());
    for (const auto& [k, c] : x.terms()) {
        auto it = y.terms().find(k);
        if (it != y.terms().end()) out.add_at(k, c * it->second);
    }
    return out;
}

template <class S>
TestFunction<S> conj(const TestFunction<S>& a) {
    return a.map([](const S& c) { return conj(c); });
}

// (phi1 * phi2)(x) = int phi1(y) phi2(x - y) dy; the ball sum 1_{a+B_g} * 1_{b+B_h} is
// p^{n min(g,h)} 1_{a+b+B_max(g,h)}.
template <class S>
TestFunction<S> convolve(const TestFunction<S>& f, const TestFunction<S>& g) {
    if (f.prime() != g.prime()) throw prime_mismatch();
    if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
    unsigned long p = f.prime();
    std::size_t n = f.dim();
    int hi = std::max(f.gamma(), g.gamma()), lo = std::min(f.gamma(), g.gamma());
    TestFunction<S> out(p, n, hi);
    if (f.is_zero() || g.is_zero()) return out;
    Rational vol = rpow(p, static_cast<long>(lo) * static_cast<long>(n));
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            PVector key(n);
            for (std::size_t i = 0; i < n; ++i) key[i] = canonical_coord(a[i] + b[i], hi, p);
            out.add_at(key, detail::scale(ca * cb, vol));
        }
    return out;
}

}  // namespace padicqf
