#include "asai/descriptors.hpp"
#include "asai/error.hpp"
#include "asai/iwasawa_measure.hpp"
#include "asai/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace asai;
using ojson = nlohmann::ordered_json;

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 20240611;
    long precision = 40;
    long prime = 0;
};

// FNV-1a over the concatenated inputs
std::string digest(const std::vector<std::string>& parts) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& s : parts) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ojson complex_json(Complex z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g %+.15gi", z.real(), z.imag());
    return buf;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(Errc::invalid_input, "cannot write '" + path + "'");
    out << text << "\n";
}

class Report {
public:
    Report(std::string command, std::vector<std::string> inputs)
        : t0_(std::chrono::steady_clock::now()) {
        j_["command"] = std::move(command);
        j_["inputs_digest"] = digest(inputs);
        j_["checks"] = ojson::array();
        j_["values"] = ojson::object();
    }
    void check(const std::string& name, bool ok, double value = 0, double tol = 0, const std::string& detail = "") {
        ok_ = ok_ && ok;
        j_["checks"].push_back(
            {{"name", name}, {"status", ok ? "pass" : "fail"}, {"value", value}, {"tolerance", tol}, {"detail", detail}});
        text_ << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) text_ << "  [" << detail << "]";
        text_ << "\n";
    }
    void value(const std::string& key, const ojson& v, const std::string& shown) {
        j_["values"][key] = v;
        text_ << key << " = " << shown << "\n";
    }
    void line(const std::string& s) { text_ << s << "\n"; }
    int finish(bool json) {
        j_["status"] = ok_ ? "pass" : "fail";
        j_["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        if (json)
            std::cout << j_.dump(2) << "\n";
        else
            std::cout << text_.str();
        return ok_ ? 0 : 1;
    }

private:
    ojson j_;
    std::ostringstream text_;
    bool ok_ = true;
    std::chrono::steady_clock::time_point t0_;
};

int cmd_verify(const Globals& g, const std::string& suite, std::optional<long> n, std::optional<double> s,
               const std::string& csv, SuiteConfig cfg) {
    cfg.n = n;
    cfg.s = s;
    cfg.seed = g.seed;
    cfg.precision = g.precision;
    if (g.prime) cfg.prime = g.prime;
    SuiteReport r = run_suite(suite, cfg);
    Report rep("verify " + suite, {suite, std::to_string(g.seed), std::to_string(g.precision), std::to_string(g.prime)});
    for (const auto& c : r.checks) rep.check(c.name, c.passed, c.value, c.tolerance, c.detail);
    if (!csv.empty()) {
        if (r.table_header.empty()) fail(Errc::invalid_input, "suite '" + suite + "' has no residual table");
        std::ofstream out(csv);
        if (!out) fail(Errc::invalid_input, "cannot write '" + csv + "'");
        for (std::size_t i = 0; i < r.table_header.size(); ++i) out << (i ? "," : "") << r.table_header[i];
        out << "\n";
        for (const auto& row : r.table) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
    }
    return rep.finish(g.json);
}

int cmd_factor(const Globals& g, const std::string& satake_path, const std::string& char_path, long n, long alpha,
               std::optional<double> s) {
    std::string st = read_text_file(satake_path), ct = read_text_file(char_path);
    SatakeDescriptor sd = parse_satake(st);
    CharacterDescriptor cd = parse_character(ct);
    Report rep("factor", {st, ct, std::to_string(n), std::to_string(alpha), s ? std::to_string(*s) : ""});
    InterpolationInputs in = interpolation_inputs(sd, cd, n, alpha);
    InterpolationRHS rhs = interpolation_rhs(in);
    rep.check("hypotheses", rhs.ok(), static_cast<double>(rhs.violations.size()), 0,
              rhs.ok() ? "" : rhs.violations.front());
    for (const auto& v : rhs.violations) rep.line("violation: " + v);
    double s_eval = s.value_or(static_cast<double>(n - alpha + 1));
    auto guarded = [&](const std::string& key, const std::function<Complex()>& f) {
        try {
            Complex z = f();
            rep.value(key, complex_json(z), complex_text(z));
        } catch (const Error& e) {
            rep.value(key, ojson{{"error", e.what()}}, std::string("error: ") + e.what());
        }
    };
    guarded("L_p(s)", [&] { return asai_L_factor(in.at_p, in.twist_at_p).eval(Complex(s_eval, 0)); });
    guarded("gamma_p(s)", [&] { return asai_gamma_factor(in.at_p, in.twist_at_p).eval(Complex(s_eval, 0)); });
    rep.value("s", s_eval, std::to_string(s_eval));
    if (rhs.ok()) {
        rep.value("E_infinity", complex_json(rhs.E_infinity), complex_text(rhs.E_infinity));
        rep.value("E_p", complex_json(rhs.E_p), complex_text(rhs.E_p));
        rep.value("L_p(n-alpha+1)", complex_json(rhs.L_p), complex_text(rhs.L_p));
        rep.value("L_euler_set(n-alpha+1)", complex_json(rhs.L_euler_set), complex_text(rhs.L_euler_set));
        rep.value("interpolation_rhs", complex_json(rhs.value), complex_text(rhs.value) + "  (divided by Omega = 1)");
        if (rhs.auxiliary_factor)
            rep.value("auxiliary_factor", complex_json(*rhs.auxiliary_factor), complex_text(*rhs.auxiliary_factor));
    }
    return rep.finish(g.json);
}

AvatarCharacter load_avatar(const std::string& path, bool geometric) {
    CharacterDescriptor cd = parse_character(read_text_file(path));
    return AvatarCharacter{cd.model, geometric ? Orientation::Geometric : Orientation::Arithmetic};
}

ojson padic_json(const PadicElement& x) {
    return ojson{{"digits", x.to_digits()}, {"valuation", x.valuation()}, {"p", x.ctx()->p()}, {"N", x.ctx()->N()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asai p-adic L-function toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--precision", g.precision, "p-adic precision N");
    app.add_option("--prime", g.prime, "restrict prime grids / prime for synthetic data");

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    std::optional<long> vn;
    std::optional<double> vs;
    std::string csv;
    SuiteConfig tol;
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(
        std::vector<std::string>{"pairing", "cconst", "ghate", "bessel", "schwartz", "euler", "plocal", "measure", "all",
                                 "arch", "unramified", "cterm", "fourier"}));
    verify->add_option("--n", vn, "upper bound on n");
    verify->add_option("--s", vs, "evaluate at this s only");
    verify->add_option("--csv", csv, "write the residual table as CSV");
    verify->add_option("--tol-ghate", tol.tol_ghate)->capture_default_str();
    verify->add_option("--tol-bessel", tol.tol_bessel)->capture_default_str();
    verify->add_option("--tol-unramified", tol.tol_unramified)->capture_default_str();
    verify->add_option("--tol-plocal", tol.tol_plocal)->capture_default_str();
    verify->add_option("--tol-arch", tol.tol_arch)->capture_default_str();
    verify->add_option("--tol-constant-term", tol.tol_constant_term)->capture_default_str();
    verify->add_option("--cases", tol.random_cases, "random cases / families")->capture_default_str();

    // factor
    auto* factor = app.add_subcommand("factor", "local factors and interpolation components");
    std::string satake_path, char_path;
    long fn = 0, falpha = 0;
    std::optional<double> fs;
    factor->add_option("satake", satake_path, "Satake descriptor (JSON)")->required();
    factor->add_option("character", char_path, "character descriptor (JSON)")->required();
    factor->add_option("--n", fn, "weight parameter n")->required();
    factor->add_option("--alpha", falpha, "alpha")->required();
    factor->add_option("--s", fs, "evaluate L and gamma at s (default n - alpha + 1)");

    // measure
    auto* measure = app.add_subcommand("measure", "p-adic measures");
    measure->require_subcommand(1);
    auto* m_synth = measure->add_subcommand("synth", "synthetic projective family");
    long depth = 4;
    std::optional<long> delta_at;
    std::string out_path;
    m_synth->add_option("--depth", depth)->capture_default_str();
    m_synth->add_option("--delta", delta_at, "delta measure at this unit instead of random data");
    m_synth->add_option("--out", out_path)->required();
    auto* m_check = measure->add_subcommand("check", "distribution property");
    std::string in_path;
    m_check->add_option("file", in_path)->required();
    auto* m_eval = measure->add_subcommand("eval", "evaluate at a character");
    std::string eval_char;
    std::optional<long> eval_level;
    bool geometric = false;
    m_eval->add_option("file", in_path)->required();
    m_eval->add_option("--character", eval_char)->required();
    m_eval->add_option("--level", eval_level);
    m_eval->add_flag("--geometric", geometric, "geometric reciprocity orientation");
    auto* m_twist = measure->add_subcommand("twist", "Tw_p^k");
    long tw_k = 0;
    m_twist->add_option("file", in_path)->required();
    m_twist->add_option("--k", tw_k)->required();
    m_twist->add_option("--out", out_path)->required();
    m_twist->add_flag("--geometric", geometric);
    auto* m_build = measure->add_subcommand("build-lp", "assemble L_p from partial data");
    long bn = 0, balpha = 0, bm = 0, cinf = 1, lambda = 1, xi2 = 1, qv0 = 0;
    std::optional<long> kappa;
    bool omega_trivial = false;
    std::string b_char;
    m_build->add_option("file", in_path)->required();
    m_build->add_option("--n", bn)->required();
    m_build->add_option("--alpha", balpha)->required();
    m_build->add_option("--m", bm)->capture_default_str();
    m_build->add_option("--kappa", kappa, "[kappa], default n + 2m");
    m_build->add_option("--cinf", cinf, "c_inf as an integer unit")->capture_default_str();
    m_build->add_option("--lambda", lambda, "lambda_{E/F} image as an integer unit")->capture_default_str();
    m_build->add_option("--xi2", xi2, "xi^2 as a unit residue")->capture_default_str();
    m_build->add_flag("--omega-trivial", omega_trivial, "multiply by P_v0^{-1}");
    m_build->add_option("--qv0", qv0, "auxiliary prime");
    m_build->add_option("--out", out_path)->required();
    m_build->add_option("--character", b_char, "also compare eval with the direct finite sum at this character");
    m_build->add_flag("--geometric", geometric);
    auto* m_mamin = measure->add_subcommand("mamin", "experimental: Tw^{alpha'-alpha} L^alpha against L^{alpha'}");
    std::string other_path;
    long ma = 0, mb = 0;
    m_mamin->add_option("file", in_path)->required();
    m_mamin->add_option("other", other_path)->required();
    m_mamin->add_option("--alpha", ma)->required();
    m_mamin->add_option("--alpha-prime", mb)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(g, suite, vn, vs, csv, tol);
        if (*factor) return cmd_factor(g, satake_path, char_path, fn, falpha, fs);
        Orientation orient = geometric ? Orientation::Geometric : Orientation::Arithmetic;
        if (*m_synth) {
            long p = g.prime ? g.prime : 5;
            ProjectiveMeasure mu;
            if (delta_at) {
                PadicCtx ctx = PadicContext::make(p, g.precision, 1);
                mu = ProjectiveMeasure::from_top(FiniteLevelMeasure::delta(ctx, depth, *delta_at));
            } else {
                mu = synth_distribution(g.seed, depth, p, g.precision);
            }
            std::string text = measure_to_json(mu);
            write_file(out_path, text);
            Report rep("measure synth", {std::to_string(p), std::to_string(depth), std::to_string(g.seed),
                                         std::to_string(g.precision), delta_at ? std::to_string(*delta_at) : ""});
            rep.value("file", out_path, out_path);
            rep.value("digest", digest({text}), digest({text}));
            return rep.finish(g.json);
        }
        if (*m_check) {
            std::string text = read_text_file(in_path);
            ProjectiveMeasure mu = measure_from_json(text);
            Report rep("measure check", {text});
            DistributionReport d = distribution_check(mu);
            rep.check("distribution property", d.holds, static_cast<double>(d.fibers_checked), 0,
                      d.holds ? std::to_string(d.fibers_checked) + " fibers" : d.first_failure);
            return rep.finish(g.json);
        }
        if (*m_eval) {
            std::string text = read_text_file(in_path);
            ProjectiveMeasure mu = measure_from_json(text);
            AvatarCharacter chi = load_avatar(eval_char, geometric);
            Report rep("measure eval", {text, read_text_file(eval_char), eval_level ? std::to_string(*eval_level) : ""});
            PadicElement v = evaluate_at_character(mu, chi, eval_level);
            rep.value("value", padic_json(v), v.to_digits());
            rep.value("level", eval_level.value_or(mu.depth()), std::to_string(eval_level.value_or(mu.depth())));
            rep.value("precision", mu.ctx->N(), "p^" + std::to_string(mu.ctx->N()));
            return rep.finish(g.json);
        }
        if (*m_twist) {
            std::string text = read_text_file(in_path);
            ProjectiveMeasure mu = tw_p(measure_from_json(text), tw_k, orient);
            write_file(out_path, measure_to_json(mu));
            Report rep("measure twist", {text, std::to_string(tw_k)});
            rep.value("file", out_path, out_path);
            return rep.finish(g.json);
        }
        if (*m_build) {
            std::string text = read_text_file(in_path);
            ProjectiveMeasure partial = measure_from_json(text);
            LpConstants c;
            c.c_infinity = PadicElement(partial.ctx, Integer(cinf));
            c.lambda_EF = PadicElement(partial.ctx, Integer(lambda));
            c.xi2 = xi2;
            c.n = bn;
            c.alpha = balpha;
            c.m = bm;
            c.kappa_bracket = kappa;
            c.omega_trivial = omega_trivial;
            c.q_v0 = qv0;
            c.orientation = orient;
            if (omega_trivial && qv0 == 0) fail(Errc::invalid_input, "--omega-trivial needs --qv0");
            LpResult L = build_Lp(partial, c);
            write_file(out_path, measure_to_json(L.measure));
            Report rep("measure build-lp", {text, std::to_string(bn), std::to_string(balpha), std::to_string(bm),
                                            std::to_string(cinf), std::to_string(lambda), std::to_string(xi2),
                                            std::to_string(qv0), omega_trivial ? "1" : "0"});
            rep.check("result is projective", distribution_check(L.measure).holds);
            rep.value("file", out_path, out_path);
            rep.value("tw_exponent", L.tw_exponent, std::to_string(L.tw_exponent));
            rep.value("restricted_inverse", L.restricted_inverse, L.restricted_inverse ? "yes" : "no");
            ojson dropped = L.dropped_components;
            rep.value("dropped_components", dropped, dropped.dump());
            ojson sym = L.formal_symbols;
            rep.value("formal_symbols", sym, sym.dump() + " (normalized to 1)");
            if (!b_char.empty()) {
                AvatarCharacter chi = load_avatar(b_char, geometric);
                PadicElement a = evaluate_at_character(L.measure, chi);
                PadicElement b = build_Lp_direct_value(partial, c, chi);
                rep.value("eval", padic_json(a), a.to_digits());
                rep.value("direct_sum", padic_json(b), b.to_digits());
                rep.check("eval == direct finite sum", a == b, static_cast<double>((a - b).valuation()), 0,
                          "valuation of difference " + std::to_string((a - b).valuation()));
            }
            return rep.finish(g.json);
        }
        if (*m_mamin) {
            std::string ta = read_text_file(in_path), tb = read_text_file(other_path);
            MaminReport mr = mamin_compare(measure_from_json(ta), ma, measure_from_json(tb), mb);
            Report rep("measure mamin", {ta, tb, std::to_string(ma), std::to_string(mb)});
            rep.line("experimental comparison, no verdict");
            rep.value("compared", mr.compared, std::to_string(mr.compared));
            rep.value("differing_coefficients", mr.differing_coefficients, std::to_string(mr.differing_coefficients));
            rep.value("min_valuation_of_difference", mr.min_valuation_of_difference,
                      std::to_string(mr.min_valuation_of_difference));
            return rep.finish(g.json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
