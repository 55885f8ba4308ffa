// padicqf: local zeta functions, symbols and kernel identities for elliptic quadratic forms.
#include <padicqf/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace padicqf;

namespace {

enum ExitCode { kPass = 0, kMismatch = 1, kInvalid = 2, kUnsupported = 3 };

struct Options {
    unsigned long prime = 3;
    std::string form, phi, beta = "1", exponent = "shifted", out = "text", grid, suite = "all";
    int depth = kDefaultDepthBound, oracle_depth = 6;
    double s = 3.0;
    unsigned seed = 1;
    std::vector<std::string> args;
};

QuadraticForm parse_form(const Options& o) {
    if (o.form.empty()) return QuadraticForm::quaternary(o.prime);
    return QuadraticForm::parse(o.prime, o.form);
}

std::vector<std::pair<long, long>> parse_grid(const std::string& s) {
    if (s.empty()) return default_group_grid();
    std::vector<std::pair<long, long>> g;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw invalid_input("grid entries look like a:b");
        g.emplace_back(std::stol(item.substr(0, colon)), std::stol(item.substr(colon + 1)));
    }
    return g;
}

Exponent parse_exponent(const std::string& s) {
    if (s == "plain") return Exponent::Plain;
    if (s == "shifted") return Exponent::Shifted;
    throw invalid_input("exponent must be plain or shifted");
}

void write_report(const std::string& name, const json& j) {
    const char* dir = std::getenv("PADICQF_REPORT_DIR");
    if (!dir || !*dir) return;
    std::filesystem::create_directories(dir);
    std::ofstream(std::filesystem::path(dir) / (name + ".json")) << j.dump(2) << "\n";
}

void print_ratfun(const Options& o, const RationalFunctionT& r, const std::string& var) {
    if (o.out == "json") {
        std::cout << ratfun_json(r).dump(2) << "\n";
    } else if (o.out == "csv") {
        std::cout << "part,power,coeff\n";
        for (auto [part, poly] : {std::pair{"num", &r.numerator()}, std::pair{"den", &r.denominator()}})
            poly->for_each([&](int k, const ExtScalar& c) { std::cout << part << "," << k << "," << scalar_text(c) << "\n"; });
    } else {
        std::cout << r.to_string(var) << "\n";
    }
}

int cmd_zeta(const Options& o) {
    QuadraticForm f = parse_form(o);
    ZetaEngine eng(f, o.depth);
    TestFunctionE phi = load_test_function(o.phi.empty() ? "unit_ball" : o.phi, o.prime, f.dim());
    Exponent e = parse_exponent(o.exponent);
    RationalFunctionT z = eng.zeta(phi, SquareClass::parse(o.beta), e);
    json j = {{"prime", o.prime}, {"form", f.to_string()}, {"beta", o.beta}, {"exponent", o.exponent},
              {"variable", e == Exponent::Plain ? "T = p^-s" : "t = p^-s"}, {"zeta", ratfun_json(z)}};
    write_report("zeta", j);
    print_ratfun(o, z, e == Exponent::Plain ? "T" : "t");
    return kPass;
}

int cmd_hilbert(const Options& o) {
    if (o.args.size() != 2) throw invalid_input("hilbert takes two rationals");
    int h = hilbert(parse_rational(o.args[0]), parse_rational(o.args[1]), o.prime);
    write_report("hilbert", {{"prime", o.prime}, {"a", o.args[0]}, {"b", o.args[1]}, {"value", h}});
    std::cout << h << "\n";
    return kPass;
}

int cmd_gamma(const Options& o) {
    json j = {{"prime", o.prime}};
    ExtScalar g;
    if (!o.args.empty()) {
        g = weil_gamma(parse_rational(o.args[0]), o.prime);
        j["alpha"] = o.args[0];
    } else {
        QuadraticForm f = parse_form(o);
        auto inv = form_invariants(f);
        g = inv.weil_gamma;
        j["form"] = f.to_string();
        j["discriminant_class"] = inv.discriminant_class.name();
        j["hasse"] = inv.hasse;
        if (inv.d_star_class) j["d_star_class"] = inv.d_star_class->name();
    }
    j["gamma"] = ext_json(g);
    write_report("gamma", j);
    if (o.out == "json") std::cout << j.dump(2) << "\n";
    else std::cout << scalar_text(g) << "\n";
    return kPass;
}

int cmd_rho(const Options& o) {
    RationalFunctionT r = rho_factor(SquareClass::parse(o.beta), o.prime);
    write_report("rho", {{"prime", o.prime}, {"beta", o.beta}, {"variable", "t = p^-s"}, {"rho", ratfun_json(r)}});
    print_ratfun(o, r, "t");
    return kPass;
}

int cmd_fourier(const Options& o) {
    QuadraticForm f = parse_form(o);
    TestFunctionE F = fourier(load_test_function(o.phi.empty() ? "unit_ball" : o.phi, o.prime, f.dim()));
    json j = test_function_json(F);
    write_report("fourier", j);
    std::cout << j.dump(o.out == "json" ? 2 : -1) << "\n";
    return kPass;
}

int cmd_oracle(const Options& o) {
    QuadraticForm f = parse_form(o);
    ZetaEngine eng(f, o.depth);
    TestFunctionE phi = load_test_function(o.phi.empty() ? "unit_ball" : o.phi, o.prime, f.dim());
    SquareClass beta = SquareClass::parse(o.beta);
    Exponent e = parse_exponent(o.exponent);
    std::complex<double> approx = zeta_oracle_float(f, phi, beta, e, o.s, o.oracle_depth);
    std::complex<double> exact = eval_float(eng.zeta(phi, beta, e), std::pow(static_cast<double>(o.prime), -o.s));
    double err = std::abs(exact - approx);
    bool ok = err <= 1e-5 * std::max(1.0, std::abs(exact));
    json j = {{"prime", o.prime}, {"form", f.to_string()}, {"s", o.s}, {"depth", o.oracle_depth},
              {"oracle", {approx.real(), approx.imag()}}, {"certified", {exact.real(), exact.imag()}}, {"error", err}, {"equal", ok}};
    write_report("oracle", j);
    if (o.out == "json") std::cout << j.dump(2) << "\n";
    else std::cout << "oracle " << approx << " certified " << exact << " error " << err << (ok ? " PASS" : " FAIL") << "\n";
    return ok ? kPass : kMismatch;
}

// ---- verify -------------------------------------------------------------------------------------

struct Witnesses {
    std::vector<TestFunctionE> any, phi, psi;
};

Witnesses witnesses(const Options& o, std::size_t n) {
    Witnesses w;
    unsigned long p = o.prime;
    if (!o.phi.empty()) {
        TestFunctionE f = load_test_function(o.phi, p, n);
        w.any = {f};
        if (lizorkin_check(f, LizorkinSpace::Phi)) w.phi = {f};
        if (lizorkin_check(f, LizorkinSpace::Psi)) w.psi = {f};
        if (w.phi.empty() && w.psi.empty()) w.phi = {f};  // Phi suites then report the membership error
        return w;
    }
    std::mt19937_64 rng(o.seed);
    int g = n == 4 ? -1 : -2;
    for (const auto& name : builtin_names()) w.any.push_back(builtin_function(name, p, n));
    w.any.push_back(random_ball_sum(rng, p, n, g, 0, 3));
    w.phi = {builtin_function("lizorkin0", p, n), random_phi(rng, p, n, g, 0, 3)};
    w.psi = {builtin_function("shifted_box", p, n), random_psi(rng, p, n, g, 0, 3)};
    return w;
}

std::vector<ClaimReport> run_suite(const std::string& suite, const QuadraticForm& f, const Options& o) {
    std::vector<ClaimReport> out;
    Witnesses w = witnesses(o, f.dim());
    auto grid = parse_grid(o.grid);
    if (suite == "funceq") {
        for (const auto& phi : {builtin_function("unit_ball", o.prime, f.dim()), builtin_function("shifted_box", o.prime, f.dim())}) {
            if (!o.phi.empty()) break;
            for (auto& r : verify_funceq(f, phi)) out.push_back(std::move(r));
        }
        for (const auto& phi : o.phi.empty() ? std::vector<TestFunctionE>{} : w.any)
            for (auto& r : verify_funceq(f, phi)) out.push_back(std::move(r));
        return out;
    }
    RieszKernel K(f, o.depth);
    if (suite == "delta")
        for (const auto& phi : w.any) out.push_back(verify_delta(K, phi));
    else if (suite == "logkernel")
        for (const auto& phi : w.phi) out.push_back(verify_log_kernel(K, phi));
    else if (suite == "fourierkernel")
        for (const auto& psi : w.psi) out.push_back(verify_kernel_fourier(K, psi));
    else if (suite == "grouplaw")
        for (const auto& phi : w.phi) out.push_back(verify_group_law(K, phi, grid));
    else if (suite == "semigroup")
        for (const auto& phi : w.phi) out.push_back(verify_semigroup(K, phi, grid));
    else if (suite == "bernstein")
        for (const auto& phi : w.phi) out.push_back(verify_bernstein(K, phi));
    else if (suite == "fundamental")
        for (const auto& phi : w.phi)
            for (long a : {1l, 2l, 3l}) out.push_back(verify_fundamental(K, phi, a));
    else
        throw invalid_input("unknown suite: " + suite);
    return out;
}

int cmd_verify(const Options& o) {
    static const std::vector<std::string> all = {"delta", "logkernel", "fourierkernel", "grouplaw", "semigroup", "funceq", "bernstein", "fundamental"};
    std::vector<std::string> suites = o.suite == "all" ? all : std::vector<std::string>{o.suite};
    std::vector<QuadraticForm> forms;
    if (!o.form.empty()) forms.push_back(parse_form(o));
    else if (o.suite == "all")
        forms = {QuadraticForm::quaternary(o.prime), QuadraticForm::binary(o.prime, SquareClass::eps().representative(o.prime)),
                 QuadraticForm::binary(o.prime, SquareClass::p().representative(o.prime))};
    else
        forms.push_back(QuadraticForm::quaternary(o.prime));
    std::vector<ClaimReport> reports;
    for (const auto& f : forms)
        for (const auto& s : suites)
            for (auto& r : run_suite(s, f, o)) reports.push_back(std::move(r));
    json j = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        j.push_back(report_json(r));
        ok = ok && r.equal;
    }
    write_report("verify_" + o.suite, j);
    if (o.out == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (o.out == "csv") {
        std::cout << "claim,prime,form,equal\n";
        for (const auto& r : reports) std::cout << r.claim << "," << r.prime << ",\"" << r.form << "\"," << (r.equal ? 1 : 0) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.equal ? "PASS " : "FAIL ") << r.claim << " p=" << r.prime << " form=" << r.form << "\n";
            if (!r.equal) std::cout << "  lhs: " << r.lhs.dump() << "\n  rhs: " << r.rhs.dump() << "\n  witness: " << r.witness.dump() << "\n";
        }
        std::cout << reports.size() << " claims, " << (ok ? "all passed" : "mismatch found") << "\n";
    }
    return ok ? kPass : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"padicqf: zeta functions and Riesz kernels of elliptic p-adic quadratic forms"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--prime", o.prime, "odd prime p")->required();
        c->add_option("--form", o.form, "diagonal coefficients, e.g. 1,-2,-5,10 (default: the quaternary form)");
        c->add_option("--phi", o.phi, "builtin name (unit_ball, lizorkin0, shifted_box) or test-function JSON file");
        c->add_option("--beta", o.beta, "square class 1, eps, p or epsp");
        c->add_option("--exponent", o.exponent, "plain |f|^s or shifted |f|^{s-n/2}")->check(CLI::IsMember({"plain", "shifted"}));
        c->add_option("--depth", o.depth, "ball subdivision depth bound");
        c->add_option("--out", o.out, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto* zeta = app.add_subcommand("zeta", "local zeta function as a rational function");
    auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_p");
    auto* gam = app.add_subcommand("gamma", "Weil constant of a coefficient or of a form");
    auto* rho = app.add_subcommand("rho", "rho factor of pi_beta in t = p^-s");
    auto* fou = app.add_subcommand("fourier", "Fourier transform of a test function");
    auto* ora = app.add_subcommand("oracle", "float oracle against the certified zeta function");
    auto* ver = app.add_subcommand("verify", "run identity suites");
    for (auto* c : {zeta, hil, gam, rho, fou, ora, ver}) common(c);
    hil->add_option("values", o.args, "a b")->expected(2);
    gam->add_option("alpha", o.args, "coefficient")->expected(0, 1);
    ora->add_option("--s", o.s, "real exponent");
    ora->add_option("--oracle-depth", o.oracle_depth, "refinement depth of the oracle")->check(CLI::Range(1, 10));
    ver->add_option("suite", o.suite, "funceq|grouplaw|bernstein|fundamental|delta|logkernel|semigroup|fourierkernel|all")
        ->check(CLI::IsMember({"funceq", "grouplaw", "bernstein", "fundamental", "delta", "logkernel", "semigroup", "fourierkernel", "all"}));
    ver->add_option("--grid", o.grid, "integer pairs a:b,a:b,...");
    ver->add_option("--seed", o.seed, "seed for the random witnesses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kInvalid;
    }
    try {
        require_odd_prime(o.prime);
        if (*zeta) return cmd_zeta(o);
        if (*hil) return cmd_hilbert(o);
        if (*gam) return cmd_gamma(o);
        if (*rho) return cmd_rho(o);
        if (*fou) return cmd_fourier(o);
        if (*ora) return cmd_oracle(o);
        if (*ver) return cmd_verify(o);
    } catch (const unsupported_input& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
