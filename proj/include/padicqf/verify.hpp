#pragma once

#include "pseudo.hpp"
#include "serialize.hpp"

namespace padicqf {

inline ClaimReport make_report(std::string claim, const QuadraticForm& f, const TestFunctionE& witness) {
    ClaimReport r;
    r.claim = std::move(claim);
    r.prime = f.prime();
    r.form = f.to_string();
    r.witness = test_function_json(witness);
    return r;
}

// The continued pairing at t = 1 is the value at 0.
inline ClaimReport verify_delta(const RieszKernel& K, const TestFunctionE& phi) {
    ClaimReport r = make_report("delta", K.form(), phi);
    ExtScalar lhs = delta_limit(K, phi), rhs = value_at_origin(phi);
    r.lhs = ext_json(lhs);
    r.rhs = ext_json(rhs);
    r.equal = lhs == rhs;
    return r;
}

// Limit at t = p^{-n/2} of <K_a, phi> equals c int ord(f) phi on Phi.
inline ClaimReport verify_log_kernel(const RieszKernel& K, const TestFunctionE& phi) {
    ClaimReport r = make_report("logkernel", K.form(), phi);
    ExtScalar lhs = riesz_pair(K, phi).value_after_cancellation(K.log_point());
    ExtScalar rhs = log_kernel_pair(K, phi);
    r.lhs = ext_json(lhs);
    r.rhs = ext_json(rhs);
    r.extra = {{"constant", ext_json(K.log_constant())}, {"ord_moment", ext_json(K.engine().ord_moment(phi))}};
    r.equal = lhs == rhs;
    return r;
}

// <K_a, F psi> = int |f°|^{-a} psi on Psi, for a and -a.
inline ClaimReport verify_kernel_fourier(const RieszKernel& K, const TestFunctionE& psi) {
    ClaimReport r = make_report("fourier_kernel", K.form(), psi);
    FourierRelation rel = kernel_fourier_check(K, psi);
    r.lhs = ratfun_json(rel.lhs_pos);
    r.rhs = ratfun_json(rel.rhs_pos);
    r.extra = {{"negative_equal", rel.negative}};
    r.equal = rel.positive && rel.negative;
    return r;
}

inline ClaimReport verify_group_law(const RieszKernel& K, const TestFunctionE& phi,
                                    const std::vector<std::pair<long, long>>& grid = default_group_grid()) {
    ClaimReport r = make_report("grouplaw", K.form(), phi);
    GroupLawReport g = group_law_verify(K, phi, grid);
    json cases = json::array();
    for (const auto& c : g.cases) cases.push_back({{"a", c.a}, {"b", c.b}, {"equal", c.equal}});
    r.lhs = "K_a * (K_b * phi)";
    r.rhs = "K_{a+b} * phi";
    r.extra = {{"degree_span", g.degree_span}, {"cases", cases}};
    r.equal = g.ok;
    return r;
}

inline ClaimReport verify_semigroup(const RieszKernel& K, const TestFunctionE& phi,
                                    const std::vector<std::pair<long, long>>& grid = default_group_grid()) {
    ClaimReport r = make_report("semigroup", K.form(), phi);
    r.lhs = "f(d,a) f(d,b) phi";
    r.rhs = "f(d,a+b) phi";
    r.equal = pseudo_semigroup_verify(K, phi, grid);
    return r;
}

// General path for any even-dimensional form; the certified path is added for the kernel families.
inline std::vector<ClaimReport> verify_funceq(const QuadraticForm& f, const TestFunctionE& phi) {
    std::vector<ClaimReport> out;
    FunceqReport g = funceq_general(f, phi);
    ClaimReport r = make_report("funceq.general", f, phi);
    r.lhs = ratfun_json(g.lhs);
    r.rhs = {{"factor", ratfun_json(g.rhs_factor)}, {"zeta", ratfun_json(g.rhs_zeta)}};
    r.equal = g.equal;
    out.push_back(std::move(r));
    if (quaternary_parameter(f) || binary_parameter(f)) {
        FunceqReport c = funceq_verify(f, phi, FunceqPath::Certified);
        ClaimReport rc = make_report("funceq.certified", f, phi);
        rc.lhs = ratfun_json(c.lhs);
        rc.rhs = {{"factor", ratfun_json(c.rhs_factor)}, {"zeta", ratfun_json(c.rhs_zeta)}};
        rc.extra = {{"paths_agree", c.paths_agree}};
        rc.equal = c.equal && c.paths_agree;
        out.push_back(std::move(rc));
    }
    return out;
}

inline ClaimReport verify_bernstein(const RieszKernel& K, const TestFunctionE& phi) {
    ClaimReport r = make_report("bernstein", K.form(), phi);
    BernsteinReport b = bernstein_verify(K, phi);
    r.lhs = ratfun_json(b.lhs);
    r.rhs = ratfun_json(b.rhs);
    r.extra = {{"factor", ratfun_json(b.factor)}, {"intermediate", b.intermediate}};
    r.equal = b.equal && b.intermediate;
    return r;
}

inline ClaimReport verify_fundamental(const RieszKernel& K, const TestFunctionE& phi, long a) {
    ClaimReport r = make_report("fundamental.a=" + std::to_string(a), K.form(), phi);
    FundamentalReport f = fundamental_solve(PseudoOp{K, a}, phi);
    r.lhs = test_function_json(pseudo_apply(PseudoOp{K, a}, f.solution).value);
    r.rhs = test_function_json(phi);
    r.extra = {{"round_trip", f.round_trip}, {"multiplier", f.multiplier}, {"in_phi", f.in_phi},
               {"paths_agree", f.paths_agree}, {"spatial", f.spatial}};
    r.equal = f.ok();
    return r;
}

}  // namespace padicqf
