#include "asai/local_factors.hpp"

#include "asai/error.hpp"
#include "asai/special_functions.hpp"

#include <cmath>

namespace asai {

const char* rep_type_name(RepType t) {
    switch (t) {
        case RepType::UnramifiedPrincipal: return "principal";
        case RepType::Special: return "special";
        case RepType::RamifiedPrincipal: return "ramified_principal";
    }
    return "?";
}

GL2Component GL2Component::principal(const RadicalMonomial& a, const RadicalMonomial& b) {
    require(!a.is_zero() && !b.is_zero(), Errc::invalid_input, "Satake parameters must be nonzero");
    GL2Component c;
    c.type = RepType::UnramifiedPrincipal;
    c.alpha = a;
    c.beta = b;
    return c;
}

GL2Component GL2Component::special(int eta, long q_w) {
    require(eta == 1 || eta == -1, Errc::invalid_input, "eta must be an unramified quadratic character (+-1)");
    GL2Component c;
    c.type = RepType::Special;
    c.eta = eta;
    c.alpha = RadicalMonomial::q_half_power(q_w, 1) * RadicalMonomial(eta);
    c.beta = RadicalMonomial::q_half_power(q_w, -1) * RadicalMonomial(eta);
    return c;
}

GL2Component GL2Component::ramified_principal(const RadicalMonomial& mu, long nu_id, long nu_mod,
                                              const RadicalMonomial& nu_value) {
    require(nu_mod >= 2 && mod_l(nu_id, nu_mod) != 0, Errc::invalid_input, "nu must be ramified");
    GL2Component c;
    c.type = RepType::RamifiedPrincipal;
    c.alpha = mu;
    c.beta = RadicalMonomial(0);
    c.nu_id = nu_id;
    c.nu_mod = nu_mod;
    c.nu_value = nu_value;
    return c;
}

RadicalMonomial GL2Component::central_value() const {
    if (type == RepType::RamifiedPrincipal)
        fail(Errc::unsupported_case, "central character of a ramified principal series is not tracked");
    return alpha * beta;
}

SatakePlaceData SatakePlaceData::split(long q, GL2Component w, GL2Component wc) {
    SatakePlaceData d;
    d.kind = PlaceKind::Split;
    d.q = q;
    d.w = std::move(w);
    d.wc = std::move(wc);
    d.validate();
    return d;
}

SatakePlaceData SatakePlaceData::inert(long q, GL2Component w) {
    SatakePlaceData d;
    d.kind = PlaceKind::Inert;
    d.q = q;
    d.w = std::move(w);
    d.validate();
    return d;
}

RadicalMonomial SatakePlaceData::omega() const {
    if (omega_override) return *omega_override;
    if (kind == PlaceKind::Split) return w.central_value() * wc.central_value();
    return w.central_value();
}

RadicalMonomial SatakePlaceData::alpha_v() const {
    return kind == PlaceKind::Split ? w.alpha * wc.alpha : w.alpha;
}

RadicalMonomial SatakePlaceData::beta_v() const { return kind == PlaceKind::Split ? w.beta * wc.beta : w.beta; }

void SatakePlaceData::validate() const {
    require(q >= 2 && is_prime(q), Errc::invalid_input, "residue cardinality must be a prime (base field Q)");
    auto check = [&](const GL2Component& c) {
        if (c.type == RepType::Special) {
            GL2Component ref = GL2Component::special(c.eta, q_w());
            require(c.alpha == ref.alpha && c.beta == ref.beta, Errc::invalid_input,
                    "special component must have alpha = eta q_w^{1/2}, beta = eta q_w^{-1/2}");
        }
    };
    check(w);
    if (kind == PlaceKind::Split) check(wc);
}

// ---- Weil-Deligne

int WDRep::dimension() const {
    int d = 0;
    for (const auto& b : blocks) d += b.size;
    return d + 2 * static_cast<int>(pairs.size());
}

WDRep WDRep::dual() const {
    WDRep r;
    r.q = q;
    for (const auto& b : blocks) {
        Cyclotomic top = b.top.inverse() * Cyclotomic(rpow(Rational(q), b.size - 1));
        r.blocks.push_back({top, b.size, -b.ram_id, b.ram_mod});
    }
    for (const auto& c : pairs) r.pairs.push_back(c.inverse());
    return r;
}

Cyclotomic WDRep::det_frobenius() const {
    Cyclotomic d(1);
    for (const auto& b : blocks) {
        require(!b.ramified(), Errc::unsupported_case, "determinant with a ramified block");
        d *= b.top.pow(b.size) * Cyclotomic(rpow(Rational(q), -b.size * (b.size - 1) / 2));
    }
    for (const auto& c : pairs) d *= -c;
    return d;
}

WDRep gl2_wd(const GL2Component& c, long q_w) {
    WDRep r;
    r.q = q_w;
    switch (c.type) {
        case RepType::UnramifiedPrincipal:
            r.blocks.push_back({c.alpha.to_cyclotomic(), 1});
            r.blocks.push_back({c.beta.to_cyclotomic(), 1});
            break;
        case RepType::Special:
            r.blocks.push_back({c.alpha.to_cyclotomic(), 2});
            break;
        case RepType::RamifiedPrincipal:
            r.blocks.push_back({c.alpha.to_cyclotomic(), 1});
            r.blocks.push_back({c.nu_value.to_cyclotomic(), 1, c.nu_id, c.nu_mod});
            break;
    }
    return r;
}

WDRep tensor(const WDRep& a, const WDRep& b) {
    require(a.q == b.q, Errc::invalid_input, "tensor product over different residue fields");
    require(a.pairs.empty() && b.pairs.empty(), Errc::unsupported_case, "tensor product of irreducible pairs");
    WDRep r;
    r.q = a.q;
    for (const auto& x : a.blocks)
        for (const auto& y : b.blocks) {
            long mod = x.ram_mod == 1 ? y.ram_mod : x.ram_mod;
            require(x.ram_mod == 1 || y.ram_mod == 1 || x.ram_mod == y.ram_mod, Errc::unsupported_case,
                    "ramified markers with different orders");
            int kmax = std::min(x.size, y.size);
            for (int k = 0; k < kmax; ++k) {
                Cyclotomic top = x.top * y.top * Cyclotomic(rpow(Rational(a.q), -k));
                r.blocks.push_back({top, x.size + y.size - 1 - 2 * k, x.ram_id + y.ram_id, mod});
            }
        }
    return r;
}

WDRep asai_wd(const SatakePlaceData& d) {
    if (d.kind == PlaceKind::Split) return tensor(gl2_wd(d.w, d.q), gl2_wd(d.wc, d.q));
    WDRep r;
    r.q = d.q;
    const auto& c = d.w;
    switch (c.type) {
        case RepType::UnramifiedPrincipal: {
            Cyclotomic a = c.alpha.to_cyclotomic(), b = c.beta.to_cyclotomic();
            r.blocks.push_back({a, 1});
            r.blocks.push_back({b, 1});
            r.pairs.push_back(a * b);
            break;
        }
        case RepType::Special:
            r.blocks.push_back({Cyclotomic(c.eta * d.q), 3});
            r.blocks.push_back({Cyclotomic(-c.eta), 1});
            break;
        case RepType::RamifiedPrincipal:
            r.blocks.push_back({c.alpha.to_cyclotomic(), 1});
            break;
    }
    return r;
}

WDRep unramified_character_wd(const Cyclotomic& value, long q) {
    WDRep r;
    r.q = q;
    r.blocks.push_back({value, 1});
    return r;
}

RationalFunctionInQs wd_L_factor(const WDRep& rho, const LocalTwist& twist) {
    RationalFunctionInQs L = RationalFunctionInQs::constant(1, rho.q);
    if (twist.ramified()) return L;
    const Cyclotomic& t = twist.at_uniformizer;
    for (const auto& b : rho.blocks) {
        if (b.ramified()) continue;
        Cyclotomic kernel = b.top * Cyclotomic(rpow(Rational(rho.q), -(b.size - 1)));
        L = L * RationalFunctionInQs::euler(kernel * t, rho.q);
    }
    for (const auto& c : rho.pairs) L = L * RationalFunctionInQs::euler(c * t * t, rho.q, 2);
    return L;
}

LaurentPoly wd_epsilon(const WDRep& rho, const LocalTwist& twist) {
    if (twist.ramified()) {
        int dim = rho.dimension();
        Cyclotomic c = rho.det_frobenius().pow(twist.conductor) * twist.tau_inverse.pow(dim);
        return LaurentPoly::monomial(c, static_cast<int>(twist.conductor * dim));
    }
    Cyclotomic c(1);
    int deg = 0;
    for (const auto& b : rho.blocks) {
        require(!b.ramified(), Errc::unsupported_case, "epsilon factor of a ramified block");
        for (int j = 0; j + 1 < b.size; ++j) {
            c *= -(b.top * Cyclotomic(rpow(Rational(rho.q), -j)) * twist.at_uniformizer);
            ++deg;
        }
    }
    return LaurentPoly::monomial(c, deg);
}

RationalFunctionInQs GammaFactor::as_function() const {
    return RationalFunctionInQs(epsilon, LaurentPoly(1), L_s.q()) * L_dual.reflect() / L_s;
}

Complex GammaFactor::eval(Complex s) const {
    Complex inv_L = L_s.inverse().eval(s);
    Complex dual;
    try {
        dual = L_dual.eval(1.0 - s);
    } catch (const Error& e) {
        if (e.code() == Errc::pole_at_s && std::abs(inv_L) < 1e-12)
            fail(Errc::indeterminate_value, "L(s) and L(1-s, dual) both have poles");
        throw;
    }
    Complex X = std::exp(-s * std::log(static_cast<double>(L_s.q())));
    return epsilon.eval(X) * dual * inv_L;
}

GammaFactor gamma_factor(const RationalFunctionInQs& L_s, const RationalFunctionInQs& L_dual_at_s,
                         const LaurentPoly& epsilon) {
    return GammaFactor{L_s, L_dual_at_s, epsilon};
}

RationalFunctionInQs wd_gamma(const WDRep& rho, const LocalTwist& twist) {
    return gamma_factor(wd_L_factor(rho, twist), wd_L_factor(rho.dual(), twist.inverse()), wd_epsilon(rho, twist))
        .as_function();
}

RationalFunctionInQs asai_L_factor(const SatakePlaceData& d, const LocalTwist& twist) {
    return wd_L_factor(asai_wd(d), twist);
}

RationalFunctionInQs rankin_selberg_direct(const SatakePlaceData& d, const LocalTwist& twist) {
    require(d.kind == PlaceKind::Split && d.w.type == RepType::UnramifiedPrincipal &&
                d.wc.type == RepType::UnramifiedPrincipal,
            Errc::unsupported_case, "direct Rankin-Selberg product needs split unramified principal series");
    RationalFunctionInQs L = RationalFunctionInQs::constant(1, d.q);
    if (twist.ramified()) return L;
    for (const auto& x : {d.w.alpha, d.w.beta})
        for (const auto& y : {d.wc.alpha, d.wc.beta})
            L = L * RationalFunctionInQs::euler((x * y).to_cyclotomic() * twist.at_uniformizer, d.q);
    return L;
}

GammaFactor asai_gamma_factor(const SatakePlaceData& d, const LocalTwist& twist) {
    WDRep rho = asai_wd(d);
    return gamma_factor(wd_L_factor(rho, twist), wd_L_factor(rho.dual(), twist.inverse()), wd_epsilon(rho, twist));
}

// ---- modified Euler factor at p

static void require_p_types(const SatakePlaceData& d) {
    auto ok = [](const GL2Component& c) { return c.type != RepType::RamifiedPrincipal; };
    require(ok(d.w) && (d.kind == PlaceKind::Inert || ok(d.wc)), Errc::invalid_input,
            "not nearly ordinary with unramified central character at p: ramified principal component");
}

RationalFunctionInQs modified_euler_p_explicit(const SatakePlaceData& d, const LocalTwist& twist,
                                               bool literal_inert_phi) {
    require_p_types(d);
    long q = d.q;
    Cyclotomic qi(Rational(1, q));
    if (twist.ramified()) {
        long c = twist.conductor;
        Cyclotomic D;
        if (d.kind == PlaceKind::Split)
            D = (d.w.alpha * d.w.beta * d.wc.alpha * d.wc.beta * d.w.beta * d.wc.beta).to_cyclotomic();
        else
            D = -(d.w.alpha * d.w.beta * d.w.beta).to_cyclotomic();
        Cyclotomic k = twist.tau_inverse.pow(-3) / D.pow(c);
        return {LaurentPoly::monomial(k, static_cast<int>(-3 * c)), LaurentPoly(1), q};
    }
    const Cyclotomic& t = twist.at_uniformizer;
    LaurentPoly num(1), den(1);
    if (d.kind == PlaceKind::Split) {
        for (const auto& x : {d.wc.alpha * d.w.beta, d.w.alpha * d.wc.beta, d.w.beta * d.wc.beta}) {
            Cyclotomic xc = x.to_cyclotomic();
            num = num * LaurentPoly::one_minus(xc.inverse() * t.inverse() * qi, -1);
            den = den * LaurentPoly::one_minus(xc * t, 1);
        }
    } else {
        Cyclotomic a = d.w.alpha.to_cyclotomic(), b = d.w.beta.to_cyclotomic();
        num = LaurentPoly::one_minus((a * b * t * t).inverse() * qi * qi, -2) *
              LaurentPoly::one_minus((b * t).inverse() * qi, -1);
        Cyclotomic tt = literal_inert_phi ? t : t * t;
        den = LaurentPoly::one_minus(a * b * tt, 2) * LaurentPoly::one_minus(b * t, 1);
    }
    return {num, den, q};
}

ModifiedEulerP modified_euler_p(const SatakePlaceData& d, const LocalTwist& twist, long n, long alpha) {
    require_p_types(d);
    require(0 <= alpha && alpha <= n, Errc::invalid_input, "need 0 <= alpha <= n");
    require(twist.q == d.q || twist.q == 1, Errc::invalid_input, "twist at a different place");
    ModifiedEulerP r;
    WDRep chi = unramified_character_wd(d.alpha_v().to_cyclotomic(), d.q);
    r.definitional = wd_gamma(chi, twist) / wd_gamma(asai_wd(d), twist);
    r.explicit_form = modified_euler_p_explicit(d, twist);
    r.rational_identity = r.definitional.equals(r.explicit_form);
    long s0 = n - alpha + 1;
    r.EL_definitional = r.definitional.eval_exact(s0);
    r.EL_explicit = r.explicit_form.eval_exact(s0);
    r.L_value = asai_L_factor(d, twist).eval_exact(s0);
    r.E = r.EL_definitional / r.L_value;
    r.values_agree = r.EL_definitional == r.EL_explicit;
    return r;
}

// ---- archimedean

Complex GammaProduct::eval(Complex s) const {
    Complex v = prefactor * std::pow(Complex(2), Complex(two_power_slope.get_d()) * s);
    for (const auto& f : factors) {
        Complex g = f.complex_type ? Gamma_C(s + f.shift.get_d()) : Gamma_R(s + f.shift.get_d());
        v *= std::pow(g, f.power);
    }
    return v;
}

long double GammaProduct::eval_real(long double s) const {
    require(prefactor.imag() == 0, Errc::invalid_input, "real evaluation of a complex prefactor");
    long double v = prefactor.real() * std::pow(2.0L, static_cast<long double>(two_power_slope.get_d()) * s);
    for (const auto& f : factors) {
        long double x = s + static_cast<long double>(f.shift.get_d());
        long double g = f.complex_type ? Gamma_C(x) : Gamma_R(x);
        v *= std::pow(g, f.power);
    }
    return v;
}

ArchimedeanL L_infty_pair(long n, long alpha, int parity) {
    require(0 <= alpha && alpha <= n, Errc::invalid_input, "need 0 <= alpha <= n");
    require(parity == 1 || parity == -1, Errc::invalid_input, "parity must be +-1");
    if (!criticality_check(parity, n, alpha)) fail(Errc::non_critical, "(-1)^{n-alpha} phi(-1) != 1");
    long d = n - alpha;
    ArchimedeanL r;
    r.L.factors.push_back({true, Rational(2 * n - alpha + 2), 1});
    if (d % 2 == 0) {
        r.L.factors.push_back({false, Rational(d + 2), 2});
        r.epsilon_ipow = mod_l(2 * n + 3 + 2, 4);
    } else {
        r.L.factors.push_back({false, Rational(d + 1), 2});
        r.epsilon_ipow = mod_l(2 * n + 3, 4);
    }
    return r;
}

Complex ModifiedEulerInfty::EL() const { return Complex(RootOfUnity(4, ipow).to_complex()) * static_cast<double>(EL_real); }
Complex ModifiedEulerInfty::E() const { return Complex(RootOfUnity(4, ipow).to_complex()) * static_cast<double>(E_real); }

ModifiedEulerInfty modified_euler_infty(long n, long alpha, int parity) {
    ArchimedeanL Linf = L_infty_pair(n, alpha, parity);
    long d = n - alpha;
    ModifiedEulerInfty r;
    r.ipow = mod_l(-(2 * n - alpha + 2), 4);
    r.L0 = Linf.L.eval_real(0);
    if (d % 2 == 0) {
        long double g = rGamma_R(static_cast<long double>(1 - d));
        r.EL_real = -g * g * r.L0;
    } else {
        long double g = rGamma_R(static_cast<long double>(-d));
        r.EL_real = g * g * r.L0;
    }
    r.E_real = r.EL_real / r.L0;
    return r;
}

LambdaConstants lambda_constants(const std::vector<SatakePlaceData>& p_places, long p, long kappa_bracket, long m) {
    LambdaConstants r;
    r.lambda_p = RadicalMonomial(1);
    for (const auto& d : p_places) {
        require(d.q == p, Errc::invalid_input, "place does not lie over p");
        std::vector<const GL2Component*> comps{&d.w};
        if (d.kind == PlaceKind::Split) comps.push_back(&d.wc);
        for (const auto* c : comps) {
            if (c->type == RepType::RamifiedPrincipal)
                fail(Errc::not_nearly_ordinary, "no unramified nu: beta_{pi_w} unavailable");
            RadicalMonomial lw = c->beta * RadicalMonomial::q_half_power(d.q_w(), kappa_bracket + 1);
            r.lambda_w.push_back(lw);
            r.lambda_p = r.lambda_p * lw;
        }
    }
    r.lambda_p0 = r.lambda_p * RadicalMonomial(rpow(Rational(p), -m));
    r.valuation_p0 = r.lambda_p0.valuation(p);
    r.nearly_ordinary = r.valuation_p0 == 0;
    return r;
}

}  // namespace asai
