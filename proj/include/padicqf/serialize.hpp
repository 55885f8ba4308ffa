#pragma once

#include "corpus.hpp"
#include "ratfun.hpp"

#include <json.hpp>

#include <fstream>

namespace padicqf {

using json = nlohmann::ordered_json;

class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline json rational_json(const Rational& q) { return to_short_string(q); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw invalid_input("expected a rational string");
    return parse_rational(j.get<std::string>());
}

// [[k, "q"], ...]: the cyclotomic value sum q zeta_{p^L}^k
inline json cyclotomic_json(const Cyclotomic& c, int L) {
    json out = json::array();
    auto v = c.lifted(L, c.prime());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) out.push_back(json::array({static_cast<long>(k), rational_json(v[k])}));
    return out;
}

inline Cyclotomic cyclotomic_from_json(const json& j, unsigned long p, int L) {
    std::int64_t m = Cyclotomic::order(p, L);
    std::vector<Rational> buf(static_cast<std::size_t>(m));
    for (const auto& e : j) {
        std::int64_t k = e.at(0).get<std::int64_t>();
        buf[static_cast<std::size_t>(((k % m) + m) % m)] += rational_from_json(e.at(1));
    }
    return Cyclotomic::from_raw(p, L, std::move(buf));
}

// {"1": [...], "s": [...]} at level L, meaning a + b sigma_p. sqrt(p) lies in Q(zeta_p), so
// output never needs the "r" (sqrt p) or "sr" (sigma_p sqrt p) tags; input accepts them.
inline json ext_components_json(const ExtScalar& x, int L) {
    json out = json::object();
    out["1"] = cyclotomic_json(x.real_part(), L);
    if (!x.sigma_part().is_zero()) out["s"] = cyclotomic_json(x.sigma_part(), L);
    return out;
}

inline ExtScalar ext_from_components(const json& j, unsigned long p, int L) {
    ExtScalar out(p, 0);
    for (const auto& [key, v] : j.items()) {
        ExtScalar c(cyclotomic_from_json(v, p, L));
        if (key == "1") out = out + c;
        else if (key == "s") out = out + c * ExtScalar::sigma(p);
        else if (key == "r") out = out + c * ExtScalar::sqrt_p(p);
        else if (key == "sr") out = out + c * ExtScalar::sigma(p) * ExtScalar::sqrt_p(p);
        else throw invalid_input("unknown scalar component: " + key);
    }
    return out;
}

// Free-standing scalar: a rational string, or {"level": L, "1": [...], "s": [...]}.
inline json ext_json(const ExtScalar& x) {
    if (x.is_rational()) return rational_json(x.real_part().rational_value());
    json out = {{"level", x.level()}};
    json comps = ext_components_json(x, x.level());
    for (auto& [k, v] : comps.items()) out[k] = v;
    return out;
}

inline ExtScalar ext_from_json(const json& j, unsigned long p) {
    if (!j.is_object()) return ExtScalar(p, rational_from_json(j));
    json comps = j;
    comps.erase("level");
    return ext_from_components(comps, p, j.value("level", 0));
}

inline json laurent_json(const LaurentT& f) {
    json out = json::array();
    f.for_each([&](int k, const ExtScalar& c) { out.push_back(json::array({k, ext_json(c)})); });
    return out;
}

inline LaurentT laurent_from_json(const json& j, unsigned long p) {
    LaurentT f;
    for (const auto& e : j) f.add_term(e.at(0).get<int>(), ext_from_json(e.at(1), p));
    return f;
}

inline json ratfun_json(const RationalFunctionT& r) {
    return {{"num", laurent_json(r.numerator())}, {"den", laurent_json(r.denominator())}};
}

inline RationalFunctionT ratfun_from_json(const json& j, unsigned long p) {
    return RationalFunctionT(laurent_from_json(j.at("num"), p), laurent_from_json(j.at("den"), p));
}

// {"prime":5,"dim":4,"level":0,"terms":[{"center":[...],"gamma":-1,"coeff":{"1":[[0,"3/2"]]}}]}
// Terms are in lexicographic order of their centres.
inline json test_function_json(const TestFunctionE& phi) {
    int L = detail::max_level(phi);
    json terms = json::array();
    for (const auto& [k, c] : phi.terms()) {
        json center = json::array();
        for (const auto& x : k) center.push_back(rational_json(x));
        terms.push_back({{"center", center}, {"gamma", phi.gamma()}, {"coeff", ext_components_json(c, L)}});
    }
    return {{"prime", phi.prime()}, {"dim", phi.dim()}, {"level", L}, {"terms", terms}};
}

inline TestFunctionE test_function_from_json(const json& j) {
    try {
        unsigned long p = j.at("prime").get<unsigned long>();
        std::size_t n = j.at("dim").get<std::size_t>();
        int L = j.value("level", 0);
        std::vector<std::pair<Ball, ExtScalar>> raw;
        for (const auto& t : j.at("terms")) {
            Ball b;
            for (const auto& x : t.at("center")) b.center.push_back(rational_from_json(x));
            if (b.center.size() != n) throw invalid_input("centre has the wrong dimension");
            b.gamma = t.at("gamma").get<int>();
            raw.emplace_back(b, ext_from_components(t.at("coeff"), p, L));
        }
        return TestFunctionE::from_terms(p, n, raw);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed test function: ") + e.what());
    }
}

// A builtin name or a path to a test-function file.
inline TestFunctionE load_test_function(const std::string& source, unsigned long p, std::size_t n) {
    auto names = builtin_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return builtin_function(source, p, n);
    std::ifstream in(source);
    if (!in) throw invalid_input("no such builtin or file: " + source);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("cannot parse ") + source + ": " + e.what());
    }
    TestFunctionE phi = test_function_from_json(j);
    if (phi.prime() != p) throw invalid_input("test function prime differs from --prime");
    if (phi.dim() != n) throw invalid_input("test function dimension differs from the form");
    return phi;
}

// One verified claim: identifier, both sides, the outcome and the witness.
struct ClaimReport {
    std::string claim;
    unsigned long prime = 0;
    std::string form;
    json witness;
    json lhs, rhs;
    bool equal = false;
    json extra = json::object();
};

inline json report_json(const ClaimReport& r) {
    json j = {{"claim", r.claim}, {"prime", r.prime}, {"form", r.form}, {"equal", r.equal}, {"lhs", r.lhs}, {"rhs", r.rhs},
              {"witness", r.witness}};
    if (!r.extra.empty()) j["extra"] = r.extra;
    return j;
}

}  // namespace padicqf
