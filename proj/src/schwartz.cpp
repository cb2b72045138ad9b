#include "asai/schwartz.hpp"

#include "asai/error.hpp"
#include "asai/special_functions.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace asai {

const char* schwartz_kind_name(SchwartzKind k) {
    switch (k) {
        case SchwartzKind::PAdic: return "padic";
        case SchwartzKind::Ordinary: return "ordinary";
        case SchwartzKind::Tame: return "tame";
        case SchwartzKind::Auxiliary: return "auxiliary";
        case SchwartzKind::Archimedean: return "archimedean";
        case SchwartzKind::Transformed: return "transformed";
    }
    return "?";
}

namespace {

constexpr long kInfVal = 1L << 40;

long val_p(const Rational& x, long p) { return x == 0 ? kInfVal : padic_valuation(x, p); }

// exp(2 pi i {x}_p) for x with p-power denominator
RootOfUnity psi_root(const Rational& x, long p) {
    Rational y = x;
    y.canonicalize();
    Integer den = y.get_den();
    if (den == 1) return RootOfUnity();
    Integer t = den;
    while (t % p == 0) t /= p;
    require(t == 1, Errc::invalid_input, "argument must have a p-power denominator");
    Integer num = y.get_num() % den;
    if (num < 0) num += den;
    require(den.fits_slong_p(), Errc::invalid_input, "denominator too large");
    return RootOfUnity(den.get_si(), num.get_si());
}

// unit part of x (nonzero, valuation v) reduced mod p^e as a long
long unit_residue(const Rational& x, long p, long v, long e) {
    Rational u = x / rpow(Rational(p), v);
    u.canonicalize();
    Integer m(ipow(p, e));
    Integer dinv;
    Integer den = u.get_den();
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    Integer r = (u.get_num() * dinv) % m;
    if (r < 0) r += m;
    return r.get_si();
}

Cyclotomic eval_atom(const LocalAtom& a, long p, const Rational& x) {
    Rational y = x + a.shift;
    long v = val_p(y, p);
    if (v < a.level) return Cyclotomic(0);
    if (a.units_only && v != a.level) return Cyclotomic(0);
    Cyclotomic out = a.coeff;
    if (a.psi_mult != 0) out *= Cyclotomic(psi_root(a.psi_mult * x, p));
    if (a.chi) {
        long u = unit_residue(y, p, v, a.chi->r());
        out *= Cyclotomic(a.chi->value(u));
    }
    return out;
}

LocalAtom indicator(long level, bool units = false) {
    LocalAtom a;
    a.level = level;
    a.units_only = units;
    return a;
}

}  // namespace

Cyclotomic eval_local(const LocalFunction& f, long p, const Rational& x) {
    Cyclotomic s(0);
    for (const auto& a : f) s += eval_atom(a, p, x);
    return s;
}

LocalFunction local_fourier(const LocalFunction& f, long p, int sign) {
    require(sign == 1 || sign == -1, Errc::invalid_input, "sign must be +-1");
    Rational qq(p);
    LocalFunction out;
    for (const auto& a : f) {
        bool has_shift = a.shift != 0, has_psi = a.psi_mult != 0;
        require(!(has_shift && has_psi), Errc::unsupported_case, "atom with both a shift and a phase");
        bool ramified_chi = a.chi && a.chi->conductor() > 0;
        if (a.units_only && (has_shift || has_psi))
            fail(Errc::unsupported_case, "shifted or phased unit-supported atom");
        if (ramified_chi) {
            const FiniteOrderCharacter& chi = *a.chi;
            long c = chi.conductor();
            LocalAtom b;
            Cyclotomic chi_sign = sign == 1 ? Cyclotomic(1) : Cyclotomic(chi.value(-1));
            b.coeff = a.coeff * Cyclotomic(rpow(qq, -a.level - c)) * chi.gauss_sum(1) / chi_sign;
            b.level = -a.level - c;
            b.units_only = true;
            b.chi = chi.inverse();
            out.push_back(b);
            continue;
        }
        LocalAtom b = indicator(-a.level);
        b.coeff = a.coeff * Cyclotomic(rpow(qq, -a.level));
        if (has_psi) b.shift = Rational(sign) * a.psi_mult;
        if (has_shift) b.psi_mult = -Rational(sign) * a.shift;
        out.push_back(b);
        if (a.units_only) {
            LocalAtom c2 = indicator(-a.level - 1);
            c2.coeff = -a.coeff * Cyclotomic(rpow(qq, -a.level - 1));
            out.push_back(c2);
        }
    }
    return out;
}

SchwartzClass SchwartzClass::padic(long p, long r) {
    require(r >= 0, Errc::invalid_input, "level must be non-negative");
    SchwartzClass c;
    c.kind = SchwartzKind::PAdic;
    c.p = p;
    c.r = r;
    LocalAtom ax = indicator(0);
    ax.psi_mult = Rational(1) / rpow(Rational(p), r);
    c.fx = {ax};
    c.fy = {indicator(0)};
    return c;
}

SchwartzClass SchwartzClass::ordinary(long p) {
    SchwartzClass c;
    c.kind = SchwartzKind::Ordinary;
    c.p = p;
    c.fx = {indicator(0)};
    c.fy = {indicator(0)};
    return c;
}

SchwartzClass SchwartzClass::tame(const FiniteOrderCharacter& omega) {
    SchwartzClass c;
    c.kind = SchwartzKind::Tame;
    c.p = omega.p();
    c.fx = {indicator(1)};
    LocalAtom ay = indicator(0, true);
    ay.chi = omega.inverse();
    c.fy = {ay};
    return c;
}

SchwartzClass SchwartzClass::auxiliary(long q) {
    require(is_prime(q), Errc::invalid_input, "auxiliary place must be a prime");
    SchwartzClass c;
    c.kind = SchwartzKind::Auxiliary;
    c.p = q;
    c.fx = {indicator(0, true)};
    c.fy = {indicator(0)};
    return c;
}

SchwartzClass SchwartzClass::archimedean(long k) {
    require(k >= 0, Errc::invalid_input, "weight must be non-negative");
    SchwartzClass c;
    c.kind = SchwartzKind::Archimedean;
    c.k = k;
    return c;
}

Cyclotomic SchwartzClass::eval(const Rational& x, const Rational& y) const {
    require(!is_archimedean(), Errc::invalid_input, "archimedean class has no exact model");
    Cyclotomic a = eval_local(fx, p, x);
    if (a.is_zero()) return a;
    return a * eval_local(fy, p, y);
}

Complex SchwartzClass::eval_arch(double x, double y) const {
    require(is_archimedean(), Errc::invalid_input, "not an archimedean class");
    Complex half(x / 2, y / 2), v = std::exp(-std::numbers::pi * (x * x + y * y));
    // integer power: std::pow(0, 0.0) is NaN for complex arguments
    for (long i = 0; i < k; ++i) v *= half;
    return static_cast<double>(arch_sign) * v;
}

SchwartzClass fourier_transform(const SchwartzClass& phi) {
    SchwartzClass out = phi;
    if (phi.is_archimedean()) {
        // psi_inf(x) = exp(-2 pi i x): hat Phi_k = (-1)^k Phi_k
        if (phi.k % 2 != 0) out.arch_sign = -phi.arch_sign;
        return out;
    }
    out.kind = SchwartzKind::Transformed;
    out.fx = local_fourier(phi.fy, phi.p, -1);
    out.fy = local_fourier(phi.fx, phi.p, 1);
    return out;
}

Cyclotomic finite_fourier_oracle(const SchwartzClass& phi, long invariance, long support, const Rational& x,
                                 const Rational& y) {
    require(!phi.is_archimedean(), Errc::invalid_input, "finite places only");
    require(val_p(x, phi.p) >= -invariance && val_p(y, phi.p) >= -invariance, Errc::invalid_input,
            "evaluation point outside p^{-invariance} O");
    long p = phi.p;
    long span = ipow(p, invariance + support);
    Rational base = rpow(Rational(p), -support);
    // terms grouped by rational coefficient, then by root of unity in a common order
    std::vector<std::pair<Rational, RootOfUnity>> terms;
    std::vector<Cyclotomic> irregular;
    long L = 1;
    for (long i = 0; i < span; ++i) {
        Rational s = base * Rational(i);
        Cyclotomic fs = eval_local(phi.fx, p, s);
        if (fs.is_zero()) continue;
        for (long j = 0; j < span; ++j) {
            Rational t = base * Rational(j);
            Cyclotomic v = fs * eval_local(phi.fy, p, t);
            if (v.is_zero()) continue;
            RootOfUnity k = psi_root(s * y - t * x, p);
            Cyclotomic sv = v.simplify();
            // single-root values go through counts; anything else is summed directly
            bool done = false;
            if (sv.is_rational()) {
                terms.push_back({sv.to_rational(), k});
                L = lcm_l(L, k.order());
                done = true;
            } else {
                long m = sv.order();
                const auto& cs = sv.coeffs();
                long nz = 0, idx = -1;
                for (std::size_t e = 0; e < cs.size(); ++e)
                    if (cs[e] != 0) ++nz, idx = static_cast<long>(e);
                if (nz == 1) {
                    RootOfUnity w = RootOfUnity(m, idx) * k;
                    terms.push_back({cs[idx], w});
                    L = lcm_l(L, w.order());
                    done = true;
                }
            }
            if (!done) irregular.push_back(sv * Cyclotomic(k));
        }
    }
    std::vector<Rational> acc(L, Rational(0));
    for (const auto& [c, w] : terms) acc[mod_l(w.exponent() * (L / w.order()), L)] += c;
    Cyclotomic total = Cyclotomic::from_powers(L, acc);
    for (const auto& c : irregular) total += c;
    return total * Cyclotomic(rpow(Rational(p), -2 * invariance));
}

Complex arch_fourier_numeric(const SchwartzClass& phi, double x, double y, int grid, double L) {
    require(phi.is_archimedean(), Errc::invalid_input, "not an archimedean class");
    double h = 2 * L / grid;
    Complex acc = 0;
    for (int i = 0; i <= grid; ++i) {
        double s = -L + i * h;
        for (int j = 0; j <= grid; ++j) {
            double t = -L + j * h;
            acc += phi.eval_arch(s, t) * std::polar(1.0, -2 * std::numbers::pi * (s * y - t * x));
        }
    }
    return acc * h * h;
}

bool ppower_counts_vanish(const std::vector<long>& counts, long p, long e) {
    long N = ipow(p, e);
    require(static_cast<long>(counts.size()) == N, Errc::invalid_input, "count vector has the wrong length");
    if (e == 0) return counts[0] == 0;
    long b = N / p;
    for (long a = 0; a < b; ++a)
        for (long j = 1; j < p; ++j)
            if (counts[a + j * b] != counts[a]) return false;
    return true;
}

IdentityReport unit_average(long p, long r, long M) {
    require(is_prime(p) && p > 2, Errc::invalid_input, "p must be an odd prime");
    require(r >= 1, Errc::invalid_input, "level must be positive");
    require(M >= r + 1, Errc::invalid_input, "model precision M must be at least r + 1");
    require(std::pow(static_cast<double>(p), 2.0 * M) < 5e8, Errc::invalid_input, "model too large");
    IdentityReport rep;
    long N = ipow(p, M), pr = ipow(p, r), pr1 = pr / p;
    std::vector<long> units;
    for (long u = 1; u < pr; ++u)
        if (u % p != 0) units.push_back(u);
    std::vector<long> counts(pr);
    for (long m = 0; m < N; ++m) {
        // Phi^(r)(u m, u n) = psi(u m / p^r): independent of n on O
        std::fill(counts.begin(), counts.end(), 0);
        for (long u : units) counts[u * (m % pr) % pr] += 1;
        long rhs = (m % pr == 0 ? pr : 0) - (m % pr1 == 0 ? pr1 : 0);
        long printed = pr - pr1;
        counts[0] -= rhs;
        bool ok = ppower_counts_vanish(counts, p, r);
        for (long n = 0; n < N; ++n) {
            ++rep.points;
            if (!ok) {
                if (rep.failures++ == 0) rep.first_failure = "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
            }
            if (rhs != printed) ++rep.printed_form_mismatches;
        }
    }
    return rep;
}

IdentityReport section_distribution_check(long p, long r, long M) {
    require(is_prime(p) && p > 2, Errc::invalid_input, "p must be an odd prime");
    require(r >= 1, Errc::invalid_input, "level must be positive");
    require(M >= r + 2, Errc::invalid_input, "model precision M must be at least r + 2");
    require(std::pow(static_cast<double>(p), 2.0 * M) < 2e7, Errc::invalid_input, "model too large");
    IdentityReport rep;
    long N = ipow(p, M), P = ipow(p, r + 1), pr = ipow(p, r), b = P / p;
    std::vector<long> counts(P, 0);
    std::vector<long> touched;
    touched.reserve(p * p + 1);
    for (long m = 0; m < N; ++m) {
        for (long n = 0; n < N; ++n) {
            ++rep.points;
            touched.clear();
            // Phi^(r+1)(a, b) = psi(a / p^{r+1}) for a, b in O
            for (long x = 0; x < p; ++x)
                for (long y = 0; y < p; ++y) {
                    long a = ((m % P) * ((1 + x * pr) % P) + (n % P) * (y * pr % P)) % P;
                    counts[a] += 1;
                    touched.push_back(a);
                }
            if (m % p == 0 && n % p == 0) {
                counts[m % P] -= p * p;
                touched.push_back(m % P);
            }
            // zero in Q(zeta_P) iff constant on every class a + j P/p; only touched classes can be nonconstant
            bool ok = true;
            for (long a : touched) {
                long a0 = a % b;
                for (long j = 1; j < p && ok; ++j)
                    if (counts[a0 + j * b] != counts[a0]) ok = false;
            }
            for (long a : touched) counts[a] = 0;
            if (!ok && rep.failures++ == 0)
                rep.first_failure = "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")";
        }
    }
    return rep;
}

Complex distribution_constant(long r, long n, long alpha, Complex s, const Cyclotomic& omega_p,
                              const std::vector<long>& q_list) {
    Complex v = std::pow(omega_p.to_complex(), -static_cast<double>(r));
    for (long q : q_list) v *= std::exp(2.0 * (s + static_cast<double>(n - alpha)) * static_cast<double>(r) *
                                         std::log(static_cast<double>(q)));
    return v;
}

namespace {

Complex ipow_i(long k) {
    static const Complex t[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return t[mod_l(k, 4)];
}

}  // namespace

SectionValue local_section_value(const SectionData& d, const BruhatPoint& g, Complex s) {
    SectionValue v;
    Complex up = g.chars * std::pow(g.ratio, s + 0.5);
    Complex down = g.chars_swapped * std::pow(1.0 / g.ratio, s - 0.5);
    switch (d.place) {
        case SectionPlace::Archimedean: {
            long k = d.n_alpha + 2;
            Complex e = std::polar(1.0, static_cast<double>(k) * g.theta);
            v.F = up * e * std::pow(2.0, s - 1.0) * ipow_i(k) * Gamma_C(s + static_cast<double>(k));
            Complex rg = s == 0.0 ? Complex(0) : 1.0 / Gamma_C(s);
            v.MF = down * e * -std::pow(2.0, -(s + static_cast<double>(d.n_alpha) + 1.0)) *
                   Gamma_C(1.0 + static_cast<double>(d.n_alpha) + 2.0 * s) * rg;
            return v;
        }
        case SectionPlace::Unramified: {
            Complex X = std::exp(-s * std::log(static_cast<double>(d.q)));
            Complex qi = 1.0 / static_cast<double>(d.q);
            v.F = up / (1.0 - d.chi12 * X * X * qi);
            v.MF = down / (1.0 - d.chi12 * X * X);
            return v;
        }
        case SectionPlace::Tame:
            v.F = g.coset == Coset::BK0 ? up : Complex(0);
            v.MF = g.coset == Coset::BW2K0 ? down * static_cast<double>(d.omega_minus_one) / static_cast<double>(d.q)
                                           : Complex(0);
            return v;
        case SectionPlace::Auxiliary:
            v.F = g.coset == Coset::BW2K0 ? up : Complex(0);
            v.MF = g.coset == Coset::BK0 ? down : Complex(0);
            return v;
    }
    return v;
}

namespace {

struct FiniteProducts {
    Complex f = 1, mf = 1;
};

FiniteProducts special_places(const ConstantTermConfig& c, double s) {
    FiniteProducts out;
    BruhatPoint g;
    for (std::size_t i = 0; i < c.tame_primes.size(); ++i) {
        g.coset = i < c.tame_cosets.size() ? c.tame_cosets[i] : Coset::BK0;
        SectionData d{SectionPlace::Tame, c.tame_primes[i], c.n_alpha, 1, c.omega_minus_one};
        SectionValue v = local_section_value(d, g, s);
        out.f *= v.F;
        out.mf *= v.MF;
    }
    if (c.aux_prime) {
        g.coset = c.aux_coset;
        SectionData d{SectionPlace::Auxiliary, *c.aux_prime, c.n_alpha, 1, 1};
        SectionValue v = local_section_value(d, g, s);
        out.f *= v.F;
        out.mf *= v.MF;
    }
    return out;
}

// partial zeta with the listed Euler factors removed
double partial_zeta(double x, const std::vector<long>& removed) {
    double z = riemann_zeta(x);
    for (long q : removed) z *= 1 - std::pow(static_cast<double>(q), -x);
    return z;
}

void check_config(const ConstantTermConfig& c) {
    require(c.n_alpha >= 0 && c.n_alpha % 2 == 0, Errc::invalid_input, "n_alpha must be even and non-negative");
    for (long q : c.tame_primes) require(is_prime(q), Errc::invalid_input, "tame places must be primes");
    if (c.aux_prime) require(is_prime(*c.aux_prime), Errc::invalid_input, "auxiliary place must be a prime");
}

}  // namespace

ConstantTerm constant_term(const ConstantTermConfig& c, double s) {
    check_config(c);
    require(s != 0, Errc::invalid_input, "use constant_term_at_zero for s = 0");
    long k = c.n_alpha + 2;
    FiniteProducts fp = special_places(c, s);
    const BruhatPoint& g = c.arch_point;
    Complex e = std::polar(1.0, static_cast<double>(k) * g.theta);
    std::vector<long> s1 = c.tame_primes, s2;
    if (c.aux_prime) {
        s1.push_back(*c.aux_prime);
        s2.push_back(*c.aux_prime);
    }
    ConstantTerm t;
    // L(2s+1, phi1 phi2^{-1}) = zeta(2s + n_alpha + 2), L(2s, .) = zeta(2s + n_alpha + 1)
    t.first = std::pow(2.0, s - 1) * ipow_i(k) * Gamma_C(Complex(s + k)) * partial_zeta(2 * s + c.n_alpha + 2, s1) *
              e * g.chars * std::pow(g.ratio, s + 0.5) * fp.f;
    Complex second = std::pow(2.0, s + k - 1) * -1.0 * Gamma_C(Complex(2 * s + k - 1)) / Gamma_C(Complex(s));
    if (fp.mf != 0.0) second *= partial_zeta(2 * s + c.n_alpha + 1, s2);
    t.second = second * e * g.chars_swapped * std::pow(g.ratio, 0.5 - s) * fp.mf;
    return t;
}

ConstantTerm constant_term_at_zero(const ConstantTermConfig& c) {
    check_config(c);
    if (c.n_alpha == 0 && !c.aux_prime && c.tame_primes.empty())
        fail(Errc::pole_at_zero, "no tame or auxiliary place: the Eisenstein series has a pole at s = 0");
    long k = c.n_alpha + 2;
    FiniteProducts fp = special_places(c, 0);
    const BruhatPoint& g = c.arch_point;
    Complex e = std::polar(1.0, static_cast<double>(k) * g.theta);
    std::vector<long> s1 = c.tame_primes, s2;
    if (c.aux_prime) {
        s1.push_back(*c.aux_prime);
        s2.push_back(*c.aux_prime);
    }
    ConstantTerm t;
    t.first = 0.5 * ipow_i(k) * static_cast<double>(Gamma_C(static_cast<long double>(k))) *
              partial_zeta(c.n_alpha + 2, s1) * e * g.chars * std::sqrt(g.ratio) * fp.f;
    Complex second = 0;
    if (c.n_alpha == 0 && fp.mf != 0.0) {
        // 1/Gamma_C(s) ~ s/2 against zeta(2s+1) ~ 1/(2s); removed Euler factors at s = 0
        double lim = 0.25;
        for (long q : s2) lim *= 1 - 1.0 / static_cast<double>(q);
        second = std::pow(2.0, k - 1) * -1.0 * static_cast<double>(Gamma_C(static_cast<long double>(k - 1))) * lim;
    }
    t.second = second * e * g.chars_swapped * std::sqrt(g.ratio) * fp.mf;
    return t;
}

}  // namespace asai
