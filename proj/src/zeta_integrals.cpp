#include "asai/zeta_integrals.hpp"

#include "asai/error.hpp"
#include "asai/poly_weights.hpp"
#include "asai/special_functions.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>

namespace asai {

namespace {

constexpr double kPi = std::numbers::pi;

struct GslQuiet {
    gsl_error_handler_t* old;
    GslQuiet() : old(gsl_set_error_handler_off()) {}
    ~GslQuiet() { gsl_set_error_handler(old); }
};

double trampoline(double x, void* params) { return (*static_cast<std::function<double(double)>*>(params))(x); }

// adaptive Gauss-Kronrod on [a, b]
double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg,
                 const char* what) {
    GslQuiet quiet;
    std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
        gsl_integration_workspace_alloc(cfg.limit), &gsl_integration_workspace_free);
    gsl_function F;
    std::function<double(double)> g = f;
    F.function = &trampoline;
    F.params = &g;
    double result = 0, abserr = 0;
    int st = gsl_integration_qag(&F, a, b, cfg.epsabs, cfg.epsrel, cfg.limit, GSL_INTEG_GAUSS41, ws.get(), &result,
                                 &abserr);
    if (st != GSL_SUCCESS)
        fail(Errc::quadrature_failure, std::string(what) + ": " + gsl_strerror(st) + " on [" + std::to_string(a) + ", " +
                                           std::to_string(b) + "], estimate " + std::to_string(result) +
                                           " +- " + std::to_string(abserr));
    return result;
}

Complex ipow_i(long k) {
    switch (mod_l(k, 4)) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

long double sign_pow(long k) { return k % 2 == 0 ? 1.0L : -1.0L; }

}  // namespace

double kbessel(double nu, double x, const QuadratureConfig& cfg) {
    require(x > 0, Errc::invalid_input, "K-Bessel needs x > 0");
    double a = std::fabs(nu);
    // integrand below exp(-745) beyond T: x cosh T - a T >= 745
    double T = 1;
    while (x * std::cosh(T) - a * T < 745) T *= 1.25;
    auto f = [&](double u) { return std::exp(-x * std::cosh(u) + a * u) * 0.5 * (1 + std::exp(-2 * a * u)); };
    return integrate(f, 0, T, cfg, "K-Bessel");
}

Complex kbessel_mellin(double nu, double mu, Complex s) {
    require(mu > 0, Errc::invalid_input, "mu must be positive");
    require((s + nu).real() > 0 && (s - nu).real() > 0, Errc::invalid_input, "Mellin integral needs Re(s +- nu) > 0");
    return std::pow(2.0, s - 2.0) * std::pow(mu, -s) * gamma_c((s + nu) / 2.0) * gamma_c((s - nu) / 2.0);
}

double kbessel_mellin_quadrature(double nu, double mu, double s, const QuadratureConfig& cfg) {
    require(mu > 0, Errc::invalid_input, "mu must be positive");
    double a = std::fabs(nu);
    require(s - a > 0, Errc::invalid_input, "Mellin integral needs Re(s +- nu) > 0");
    // near a = 0 the integrand is ~ a^{s-|nu|} (a^s |log a| for nu = 0); beyond mu a = 750 it underflows
    double y_lo = std::log(1 / mu) - 42 / std::min(1.0, s - a) - 4;
    double y_hi = std::log(750 / mu);
    QuadratureConfig inner = cfg;
    inner.epsrel = std::min(cfg.epsrel, 1e-13);
    auto f = [&](double y) { return kbessel(nu, mu * std::exp(y), inner) * std::exp(s * y); };
    // split at the peak region for the adaptive routine
    double y_mid = std::log(std::max(s, 1.0) / mu);
    return integrate(f, y_lo, y_mid, cfg, "Mellin") + integrate(f, y_mid, y_hi, cfg, "Mellin");
}

Complex arch_t_integral(Complex s, long n, long alpha) {
    long d = n - alpha;
    require((s + static_cast<double>(d + 1)).real() > 0, Errc::invalid_input, "t-integral needs Re(s + n - alpha + 1) > 0");
    return static_cast<double>(sign_pow(d + 1)) * std::pow(2.0, s - static_cast<double>(d) - 3.0) *
           Gamma_C(s + static_cast<double>(d + 1));
}

Complex arch_t_integral_quadrature(double s, long n, long alpha, const QuadratureConfig& cfg) {
    long k = 2 * (n - alpha + 1);
    require(2 * s + k > 0, Errc::invalid_input, "t-integral diverges");
    double e = 2 * s + k - 1;
    // e^{-pi t^2} < 1e-300 past t = 15
    auto f = [&](double t) { return std::pow(t, e) * std::exp(-kPi * t * t); };
    double peak = std::sqrt(std::max(e, 0.0) / (2 * kPi));
    double v = integrate(f, 0, peak + 1e-3, cfg, "t-integral") + integrate(f, peak + 1e-3, 15 + peak, cfg, "t-integral");
    return std::pow(2.0, -static_cast<double>(k)) * ipow_i(k) * v;
}

Complex arch_a_integral(Complex s, long n, long alpha, long i, long disc, long k) {
    if (mod_l(alpha - i, 2) != 0) return 0;
    double b = binom(2 * n + 2, n - i + 1).get_d();
    Complex u = s + static_cast<double>(n + 1);
    return static_cast<double>(sign_pow(k - 1)) * std::pow(static_cast<double>(disc), -(s - 1.0) / 2.0) * b * 4.0 *
           std::pow(2 * kPi, -u) * gamma_c((u + static_cast<double>(i)) / 2.0) *
           gamma_c((u - static_cast<double>(i)) / 2.0);
}

long double GhateSides::error() const {
    long double a = std::fabs(lhs - rhs);
    return rhs == 0 ? a : a / std::fabs(rhs);
}

GhateSides ghate_identity(long n, long alpha, long double s) {
    require(n >= 0 && alpha >= 0 && alpha <= n, Errc::invalid_input, "need 0 <= alpha <= n");
    require(s > 0, Errc::invalid_input, "need s > 0");
    auto g = [](long double x) {
        if (x <= 0 && std::floor(x) == x) fail(Errc::indeterminate_value, "Gamma pole at the requested s");
        return std::tgamma(x);
    };
    GhateSides r;
    long double sum = 0;
    for (long i = -n - 1; i <= n + 1; ++i) {
        if (mod_l(i - alpha, 2) != 0) continue;
        long double c = c_constant(static_cast<int>(n), static_cast<int>(alpha), static_cast<int>(i)).get_d();
        long double b = binom(2 * n + 2, n + 1 - i).get_d();
        sum += c * b * g((s + n + 1 + i) / 2) * g((s + n + 1 - i) / 2);
    }
    r.lhs = sign_pow(n) / 2 * sum;
    long double bn = binom(n, alpha).get_d();
    r.rhs = sign_pow(alpha) * std::sqrt(std::numbers::pi_v<long double>) * bn * bn /
            std::pow(2.0L, s - n + alpha - 1) * g((s + n - alpha + 1) / 2) * rgamma_real((s - n + alpha) / 2) * g(s) *
            g(s + n + 1) / g(s + n - alpha + 1);
    return r;
}

long double ghate_rhs_n0_duplicated(long double s) {
    // sqrt(pi) 2^{1-s} Gamma((s+1)/2) Gamma(s) / Gamma(s/2), Gamma(s) = 2^{s-1} pi^{-1/2} Gamma(s/2) Gamma((s+1)/2)
    long double pi = std::numbers::pi_v<long double>;
    long double gs = std::pow(2.0L, s - 1) / std::sqrt(pi) * std::tgamma(s / 2) * std::tgamma((s + 1) / 2);
    return std::sqrt(pi) * std::pow(2.0L, 1 - s) * std::tgamma((s + 1) / 2) * gs / std::tgamma(s / 2);
}

double ArchZetaResult::ratio() const {
    Complex q = summation / product;
    return q.real() >= 0 ? std::abs(q) : -std::abs(q);
}

Complex c_infinity(long n, long alpha, long disc) {
    double b = binom(n, alpha).get_d();
    return static_cast<double>(sign_pow(n)) * ipow_i(alpha) * 4.0 *
           std::pow(static_cast<double>(disc), -static_cast<double>(n - alpha) / 2) * b * b;
}

ArchZetaResult arch_zeta_integral(long n, long alpha, long disc, int parity) {
    require(n >= 0 && alpha >= 0 && alpha <= n, Errc::invalid_input, "need 0 <= alpha <= n");
    require(disc > 0, Errc::invalid_input, "discriminant must be positive");
    if (!criticality_check(parity, n, alpha))
        fail(Errc::non_critical, "phi(-1) must equal (-1)^{n-alpha}");
    ArchZetaResult r;
    Complex s = static_cast<double>(n - alpha + 1);
    long k = n + 2;
    Complex t = arch_t_integral(s, n, alpha);
    Complex sum = 0;
    for (long i = -n - 1; i <= n + 1; ++i) {
        if (mod_l(i - alpha, 2) != 0) continue;
        double c = c_constant(static_cast<int>(n), static_cast<int>(alpha), static_cast<int>(i)).get_d();
        sum += c * arch_a_integral(s, n, alpha, i, disc, k) * t;
    }
    r.summation = 4.0 * sum;
    r.c_infinity = c_infinity(n, alpha, disc);
    r.product = r.c_infinity * modified_euler_infty(n, alpha, parity).EL();
    return r;
}

double LocalIntegralResult::rel_diff() const {
    require(oracle.has_value(), Errc::invalid_input, "no oracle value attached");
    double den = std::abs(closed_form);
    double a = std::abs(closed_form - *oracle);
    return den == 0 ? a : a / den;
}

Complex whittaker_coefficient(const GL2Component& c, int m) {
    switch (c.type) {
        case RepType::UnramifiedPrincipal: {
            // h_m = (a^{m+1} - b^{m+1})/(a - b) by its recurrence; equals (m+1) a^m when a = b
            Complex a = c.alpha.to_complex(), b = c.beta.to_complex();
            Complex h0 = 1, h1 = a + b;
            if (m == 0) return h0;
            for (int j = 2; j <= m; ++j) {
                Complex h2 = (a + b) * h1 - a * b * h0;
                h0 = h1;
                h1 = h2;
            }
            return h1;
        }
        case RepType::Special: return std::pow(c.beta.to_complex(), m);
        case RepType::RamifiedPrincipal: return std::pow(c.alpha.to_complex(), m);
    }
    return 0;
}

namespace {

double growth(const GL2Component& c) {
    switch (c.type) {
        case RepType::UnramifiedPrincipal: return std::max(std::abs(c.alpha.to_complex()), std::abs(c.beta.to_complex()));
        case RepType::Special: return std::abs(c.beta.to_complex());
        case RepType::RamifiedPrincipal: return std::abs(c.alpha.to_complex());
    }
    return 0;
}

struct Series {
    Complex sum;
    double tail;
};

// sum_{m <= M} Y^m W_w(m) W_wc(m) (split) or Y^m W_w(m) (inert), with Y = phi(varpi) q^{-s}
Series whittaker_series(const SatakePlaceData& d, Complex Y, int M) {
    Series r{0, 0};
    Complex y = 1;
    for (int m = 0; m <= M; ++m) {
        Complex w = whittaker_coefficient(d.w, m);
        if (d.kind == PlaceKind::Split) w *= whittaker_coefficient(d.wc, m);
        r.sum += y * w;
        y *= Y;
    }
    double rho = growth(d.w) * std::abs(Y);
    if (d.kind == PlaceKind::Split) rho *= growth(d.wc);
    if (rho >= 1) {
        r.tail = INFINITY;
    } else {
        // (m+1)^2 rho^m summed over m > M, using (M+2+k) <= (M+2)(1+k)
        double f = d.kind == PlaceKind::Split ? (M + 2.0) * (M + 2.0) : (M + 2.0);
        r.tail = f * std::pow(rho, M + 1) * (1 + rho) / std::pow(1 - rho, 3);
    }
    return r;
}

Complex q_pow_neg(long q, Complex s) { return std::exp(-s * std::log(static_cast<double>(q))); }

bool both_unramified_principal(const SatakePlaceData& d) {
    if (d.w.type != RepType::UnramifiedPrincipal) return false;
    return d.kind == PlaceKind::Inert || d.wc.type == RepType::UnramifiedPrincipal;
}

}  // namespace

LocalIntegralResult unramified_local_integral(const SatakePlaceData& d, const LocalTwist& twist, Complex s, int M,
                                              double tol) {
    d.validate();
    require(!twist.ramified(), Errc::invalid_input, "twist must be unramified at an unramified place");
    require(twist.q == d.q, Errc::invalid_input, "twist at a different place");
    LocalIntegralResult r;
    r.closed_form = asai_L_factor(d, twist).eval(s);
    if (!both_unramified_principal(d)) return r;
    Complex X = q_pow_neg(d.q, s);
    Complex phi = twist.at_uniformizer.to_complex();
    Series ser = whittaker_series(d, phi * X, M);
    double scale = std::abs(ser.sum);
    if (!(ser.tail <= tol * scale))
        fail(Errc::increase_m, "truncation tail bound " + std::to_string(ser.tail) + " exceeds tolerance at M = " +
                                   std::to_string(M));
    Complex omega = d.omega().to_complex();
    r.oracle = ser.sum / (1.0 - omega * phi * phi * X * X);
    r.oracle_route = "whittaker-summation";
    r.truncation = M;
    r.tail_bound = ser.tail;
    return r;
}

long gl2_k0_index(long q) { return q + 1; }

RationalFunctionInQs tame_integral_function(const SatakePlaceData& d, const LocalTwist& twist, bool literal_printed) {
    d.validate();
    require(!twist.ramified(), Errc::unsupported_case, "twist ramified at a tame place");
    long q = d.q;
    Cyclotomic t = twist.at_uniformizer;
    RationalFunctionInQs L = asai_L_factor(d, twist);
    auto inv_euler = [&](const Cyclotomic& a) { return RationalFunctionInQs(LaurentPoly::one_minus(a), LaurentPoly(1), q); };
    if (d.kind == PlaceKind::Inert) {
        switch (d.w.type) {
            case RepType::RamifiedPrincipal: return L;
            // tau(varpi) = -1
            case RepType::Special: return L * inv_euler(Cyclotomic(-d.w.eta) * t);
            default: fail(Errc::unsupported_case, "inert tame place needs a ramified principal or special component");
        }
    }
    RepType a = d.w.type, b = d.wc.type;
    bool a_sp = a == RepType::Special, b_sp = b == RepType::Special;
    if (a_sp && b_sp) {
        Cyclotomic e(static_cast<long>(d.w.eta * d.wc.eta));
        return L * inv_euler(literal_printed ? e : e * t);
    }
    if (a_sp || b_sp) return L;
    if (a == RepType::UnramifiedPrincipal && b == RepType::UnramifiedPrincipal)
        fail(Errc::unsupported_case, "both components unramified: not a tame place");
    // both principal; nu of an unramified component is unramified
    auto nu_frac = [](const GL2Component& c) {
        return c.type == RepType::RamifiedPrincipal ? Rational(c.nu_id, c.nu_mod) : Rational(0);
    };
    Rational f = nu_frac(d.w) + nu_frac(d.wc);
    f.canonicalize();
    if (f.get_den() != 1) return L;
    auto nu_val = [](const GL2Component& c) {
        return c.type == RepType::RamifiedPrincipal ? c.nu_value.to_cyclotomic() : c.beta.to_cyclotomic();
    };
    return L * inv_euler(nu_val(d.w) * nu_val(d.wc) * t);
}

LocalIntegralResult tame_local_integral(const SatakePlaceData& d, const LocalTwist& twist, Complex s,
                                        bool literal_printed, int M) {
    RationalFunctionInQs I = tame_integral_function(d, twist, literal_printed);
    LocalIntegralResult r;
    double idx = static_cast<double>(gl2_k0_index(d.q));
    r.closed_form = I.eval(s) / idx;
    Complex X = q_pow_neg(d.q, s);
    Series ser = whittaker_series(d, twist.at_uniformizer.to_complex() * X, M);
    if (ser.tail <= 1e-13 * std::abs(ser.sum)) {
        r.oracle = ser.sum / idx;
        r.oracle_route = "whittaker-summation";
        r.truncation = M;
        r.tail_bound = ser.tail;
    }
    return r;
}

bool aux2_holds(long q_v0, long p) { return mod_l(q_v0 * q_v0 - 1, p) != 0; }

LocalIntegralResult auxiliary_local_integral(const SatakePlaceData& d, const LocalTwist& twist, long p, Complex s,
                                             int M) {
    d.validate();
    require(aux2_holds(d.q, p), Errc::invalid_input,
            "(Aux2) violated: q^2 = 1 mod p for q = " + std::to_string(d.q) + ", p = " + std::to_string(p));
    require(both_unramified_principal(d) && !twist.ramified(), Errc::invalid_input,
            "(Aux1) violated: pi and phi must be unramified at the auxiliary prime");
    double q = static_cast<double>(d.q);
    Complex X = q_pow_neg(d.q, s);
    Complex phi = twist.at_uniformizer.to_complex();
    Complex l2 = 1.0 - d.omega().to_complex() * phi * phi * X * X;
    LocalIntegralResult r;
    r.closed_form = q / (q + 1) * asai_L_factor(d, twist).eval(s) * l2;
    r.removable_factor = q * l2;
    Series ser = whittaker_series(d, phi * X, M);
    if (ser.tail <= 1e-13 * std::abs(ser.sum)) {
        // zeta(2)/zeta(1) times the Whittaker integral
        r.oracle = (1 - 1 / q) / (1 - 1 / (q * q)) * ser.sum;
        r.oracle_route = "whittaker-summation";
        r.truncation = M;
        r.tail_bound = ser.tail;
    }
    return r;
}

Cyclotomic character_at(const FiniteOrderCharacter& phi, const Cyclotomic& phi_at_p, const Rational& x) {
    require(x != 0, Errc::invalid_input, "character at 0");
    long p = phi.p();
    long v = padic_valuation(x, p);
    Rational u = x / rpow(Rational(p), v);
    long M = phi.modulus();
    Integer num = u.get_num(), den = u.get_den();
    Integer m(M);
    Integer dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    Integer res = (num * dinv) % m;
    if (res < 0) res += m;
    Cyclotomic out = Cyclotomic(phi.value(res.get_si()));
    if (v != 0) out *= phi_at_p.pow(v);
    return out;
}

GammaRS gamma_RS(const SatakePlaceData& d, const LocalTwist& twist, const Cyclotomic& phi_xi2, Complex s,
                 const Cyclotomic& lambda, const Cyclotomic& omega_xi, const Rational& abs_xi2) {
    if (d.kind == PlaceKind::Split)
        require(lambda == Cyclotomic(1), Errc::invalid_input, "Langlands constant is 1 at split places");
    Complex g = asai_gamma_factor(d, twist).eval(s);
    GammaRS r;
    Complex pre = phi_xi2.to_complex() / lambda.to_complex();
    r.value = pre * g;
    r.unsimplified = omega_xi.to_complex() * std::pow(abs_xi2.get_d(), s - 0.5) * pre * g;
    return r;
}

Rational gl2_kr_index(long q, long r) {
    Rational qq(q);
    return rpow(qq, 4 * r) * (1 - 1 / qq) * (1 - 1 / (qq * qq));
}

namespace {

LocalTwist p_twist(const FiniteOrderCharacter& phi, const PLocalConfig& cfg) {
    if (phi.conductor() == 0) return LocalTwist::unramified(phi.p(), cfg.phi_at_p);
    require(cfg.phi_at_p == Cyclotomic(1), Errc::invalid_input, "phi(p) = 1 for p-power conductor");
    return LocalTwist::from_character(phi);
}

void check_p_data(const SatakePlaceData& d, const FiniteOrderCharacter& phi, long r) {
    d.validate();
    require(d.q == phi.p(), Errc::invalid_input, "character at a different prime");
    require(r >= 1, Errc::invalid_input, "level r must be positive");
    require(phi.conductor() <= r, Errc::invalid_input, "conductor of phi exceeds p^r");
    for (const GL2Component* c : {&d.w, &d.wc}) {
        if (d.kind == PlaceKind::Inert && c == &d.wc) break;
        require(c->type != RepType::RamifiedPrincipal, Errc::not_nearly_ordinary,
                "ramified principal series at p has no nearly ordinary stabilization");
    }
    require(d.omega() == d.alpha_v() * d.beta_v(), Errc::invalid_input, "omega_pi(p) must equal alpha beta");
}

}  // namespace

LocalIntegralResult p_local_integral(const SatakePlaceData& d, const FiniteOrderCharacter& phi_in, long r, Complex s,
                                     const PLocalConfig& cfg) {
    check_p_data(d, phi_in, r);
    FiniteOrderCharacter phi = phi_in.with_modulus(r);
    long q = d.q;
    LocalTwist twist = p_twist(phi, cfg);
    Cyclotomic alpha = d.alpha_v().to_cyclotomic();
    Cyclotomic phi_xi2 = character_at(phi, cfg.phi_at_p, cfg.xi2);
    Complex gRS = gamma_RS(d, twist, phi_xi2, s, cfg.lambda).value;
    Complex gchi = wd_gamma(unramified_character_wd(alpha, q), twist).eval(s);
    Complex phip = cfg.phi_at_p.to_complex();
    double qd = static_cast<double>(q);
    double rd = static_cast<double>(r);

    LocalIntegralResult res;
    res.closed_form = std::pow(phip, 2.0 * rd) / gl2_kr_index(q, r).get_d() * gchi / gRS;

    // Tate integral of psi(a p^{-r}) 1_O(a) (chi_alpha phi)^{-1}(a) |a|^{1-s}: units averaged level by level
    long M = phi.modulus();
    std::vector<long> units;
    for (long u = 1; u < M; ++u)
        if (u % q != 0) units.push_back(u);
    double nu = static_cast<double>(units.size());
    Complex a_phi = alpha.to_complex() * phip;
    Complex J = 0;
    for (long m = 0; m < r; ++m) {
        long den = ipow(q, r - m);
        Complex avg = 0;
        for (long u : units)
            avg += std::polar(1.0, 2 * kPi * static_cast<double>(u % den) / static_cast<double>(den)) /
                   phi.value(u).to_complex();
        avg /= nu;
        J += std::pow(a_phi, -static_cast<double>(m)) * std::pow(qd, -static_cast<double>(m) * (1.0 - s)) * avg;
    }
    Complex avg0 = 0;
    for (long u : units) avg0 += 1.0 / phi.value(u).to_complex();
    avg0 /= nu;
    Complex x = 1.0 / a_phi * std::pow(qd, s - 1.0);
    J += avg0 * std::pow(x, rd) / (1.0 - x);

    Complex beta = d.beta_v().to_complex(), omega = d.omega().to_complex();
    Complex pre = std::pow(beta * omega * std::pow(qd, 3.0 - 2.0 * s), -rd) / gRS * std::pow(omega, 2 * rd) *
                  std::pow(phip, 3 * rd) * std::pow(qd, -3.0 * s * rd) / (1 - 1 / (qd * qd));
    res.oracle = pre * J;
    res.oracle_route = "tate-chain";
    return res;
}

Complex p_local_at_critical(const SatakePlaceData& d, const FiniteOrderCharacter& phi_in, long r, long n, long alpha,
                            const PLocalConfig& cfg) {
    check_p_data(d, phi_in, r);
    FiniteOrderCharacter phi = phi_in.with_modulus(r);
    LocalTwist twist = p_twist(phi, cfg);
    ModifiedEulerP e = modified_euler_p(d, twist, n, alpha);
    Cyclotomic phi_xi2 = character_at(phi, cfg.phi_at_p, cfg.xi2);
    Complex phip = cfg.phi_at_p.to_complex();
    return std::pow(phip, 2.0 * static_cast<double>(r)) / gl2_kr_index(d.q, r).get_d() * cfg.lambda.to_complex() /
           phi_xi2.to_complex() * e.EL_definitional.to_complex();
}

}  // namespace asai
