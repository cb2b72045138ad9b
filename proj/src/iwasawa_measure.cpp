#include "asai/iwasawa_measure.hpp"

#include "asai/error.hpp"
#include "asai/zeta_integrals.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace asai {

RayClassLevel::RayClassLevel(long p, long r) : p_(p), r_(r) {
    require(is_prime(p) && p > 2, Errc::invalid_input, "p must be an odd prime");
    require(r >= 1, Errc::invalid_input, "level must be at least 1");
    mod_ = ipow(p, r);
    for (long u = 1; u < mod_; ++u)
        if (u % p != 0) elems_.push_back(u);
}

bool RayClassLevel::contains(long u) const { return u >= 1 && u < mod_ && u % p_ != 0; }
long RayClassLevel::reduce(long u) const { return mod_l(u, mod_); }
long RayClassLevel::mul(long a, long b) const {
    return static_cast<long>((static_cast<__int128>(a) * b) % mod_);
}

long RayClassLevel::inverse(long a) const {
    Integer inv, m(mod_), x(a);
    require(mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) != 0, Errc::invalid_input,
            "not a unit at this level");
    return inv.get_si();
}

long RayClassLevel::project(long u) const {
    require(r_ >= 2, Errc::invalid_input, "no level below 1");
    return u % (mod_ / p_);
}

std::vector<long> RayClassLevel::fiber(long u) const {
    std::vector<long> out;
    for (long j = 0; j < p_; ++j) out.push_back(u + j * mod_);
    return out;
}

namespace {

// dense coefficient vector indexed by position in elements()
struct Dense {
    const RayClassLevel* level;
    std::vector<long> pos;
    explicit Dense(const RayClassLevel& l) : level(&l), pos(l.modulus(), -1) {
        for (std::size_t i = 0; i < l.elements().size(); ++i) pos[l.elements()[i]] = static_cast<long>(i);
    }
};

}  // namespace

FiniteLevelMeasure::FiniteLevelMeasure(PadicCtx ctx, long r) : ctx_(std::move(ctx)), level_(ctx_->p(), r) {
    require(ctx_->f() == 1, Errc::invalid_input, "measures are modelled over Z_p (residue degree 1)");
    PadicElement zero(ctx_, Integer(0));
    for (long u : level_.elements()) coeff_.emplace(u, zero);
}

FiniteLevelMeasure FiniteLevelMeasure::delta(PadicCtx ctx, long r, long x) {
    FiniteLevelMeasure m(ctx, r);
    long u = m.level_.reduce(x);
    require(m.level_.contains(u), Errc::invalid_input, "delta point must be a unit");
    m.coeff_.at(u) = PadicElement(ctx, Integer(1));
    return m;
}

FiniteLevelMeasure FiniteLevelMeasure::scalar(PadicCtx ctx, long r, const PadicElement& c) {
    FiniteLevelMeasure m(ctx, r);
    m.coeff_.at(1) = c;
    return m;
}

const PadicElement& FiniteLevelMeasure::operator[](long x) const {
    auto it = coeff_.find(level_.reduce(x));
    require(it != coeff_.end(), Errc::invalid_input, "not a group element");
    return it->second;
}

PadicElement& FiniteLevelMeasure::operator[](long x) {
    auto it = coeff_.find(level_.reduce(x));
    require(it != coeff_.end(), Errc::invalid_input, "not a group element");
    return it->second;
}

void FiniteLevelMeasure::check_compatible(const FiniteLevelMeasure& o) const {
    require(ctx_->p() == o.ctx_->p() && ctx_->N() == o.ctx_->N() && r() == o.r(), Errc::invalid_input,
            "measures at different levels or precisions");
}

FiniteLevelMeasure FiniteLevelMeasure::operator+(const FiniteLevelMeasure& o) const {
    check_compatible(o);
    FiniteLevelMeasure out = *this;
    for (auto& [u, c] : out.coeff_) c += o.coeff_.at(u);
    return out;
}

FiniteLevelMeasure FiniteLevelMeasure::operator-(const FiniteLevelMeasure& o) const {
    check_compatible(o);
    FiniteLevelMeasure out = *this;
    for (auto& [u, c] : out.coeff_) c -= o.coeff_.at(u);
    return out;
}

FiniteLevelMeasure FiniteLevelMeasure::operator*(const FiniteLevelMeasure& o) const {
    check_compatible(o);
    const auto& el = level_.elements();
    Dense d(level_);
    std::size_t n = el.size();
    std::vector<Integer> a(n), b(n), acc(n, Integer(0));
    std::vector<std::size_t> nz_a, nz_b;
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = coeff_.at(el[i]).value();
        b[i] = o.coeff_.at(el[i]).value();
        if (a[i] != 0) nz_a.push_back(i);
        if (b[i] != 0) nz_b.push_back(i);
    }
    for (std::size_t i : nz_a)
        for (std::size_t j : nz_b) {
            long k = d.pos[level_.mul(el[i], el[j])];
            mpz_addmul(acc[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    FiniteLevelMeasure out(ctx_, r());
    for (std::size_t i = 0; i < n; ++i) out.coeff_.at(el[i]) = PadicElement(ctx_, acc[i]);
    return out;
}

FiniteLevelMeasure FiniteLevelMeasure::scaled(const PadicElement& c) const {
    FiniteLevelMeasure out = *this;
    for (auto& [u, v] : out.coeff_) v *= c;
    return out;
}

bool FiniteLevelMeasure::operator==(const FiniteLevelMeasure& o) const {
    return ctx_->p() == o.ctx_->p() && ctx_->N() == o.ctx_->N() && r() == o.r() && coeff_ == o.coeff_;
}

FiniteLevelMeasure FiniteLevelMeasure::pushforward() const {
    FiniteLevelMeasure out(ctx_, r() - 1);
    for (const auto& [u, c] : coeff_) out.coeff_.at(level_.project(u)) += c;
    return out;
}

PadicElement FiniteLevelMeasure::total_mass() const {
    PadicElement s(ctx_, Integer(0));
    for (const auto& [u, c] : coeff_) s += c;
    return s;
}

bool FiniteLevelMeasure::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

const FiniteLevelMeasure& ProjectiveMeasure::at(long r) const {
    require(r >= 1 && r <= depth(), Errc::insufficient_level, "level " + std::to_string(r) + " not available");
    return levels[r - 1];
}

ProjectiveMeasure ProjectiveMeasure::from_top(const FiniteLevelMeasure& top) {
    ProjectiveMeasure out;
    out.ctx = top.ctx();
    std::vector<FiniteLevelMeasure> rev{top};
    while (rev.back().r() > 1) rev.push_back(rev.back().pushforward());
    out.levels.assign(rev.rbegin(), rev.rend());
    return out;
}

DistributionReport distribution_check(const ProjectiveMeasure& mu) {
    DistributionReport rep;
    for (long r = 1; r <= mu.depth(); ++r) {
        if (mu.levels[r - 1].r() != r) {
            rep.holds = false;
            rep.first_failure = "level list out of order at position " + std::to_string(r);
            return rep;
        }
    }
    for (long r = 1; r < mu.depth(); ++r) {
        const auto& low = mu.levels[r - 1];
        const auto& high = mu.levels[r];
        for (long x : low.level().elements()) {
            ++rep.fibers_checked;
            PadicElement s(mu.ctx, Integer(0));
            for (long y : low.level().fiber(x)) s += high[y];
            if (s != low[x]) {
                rep.holds = false;
                rep.first_failure = "level " + std::to_string(r) + ", x = " + std::to_string(x);
                return rep;
            }
        }
    }
    return rep;
}

ProjectiveMeasure synth_distribution(std::uint64_t seed, long R, long p, long N) {
    require(R >= 1, Errc::invalid_input, "depth must be at least 1");
    PadicCtx ctx = PadicContext::make(p, N, 1);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(Integer(std::to_string(seed)));
    FiniteLevelMeasure top(ctx, R);
    for (long u : top.level().elements()) top[u] = PadicElement(ctx, rng.get_z_range(ctx->modulus_pN()));
    return ProjectiveMeasure::from_top(top);
}

PadicElement AvatarCharacter::eval(long x, const RayClassLevel& level, const PadicCtx& ctx) const {
    long u = level.reduce(x);
    if (orientation == Orientation::Geometric) u = level.inverse(u);
    return padic_avatar_eval(model, u, ctx);
}

PadicElement evaluate_at_character(const FiniteLevelMeasure& mu, const AvatarCharacter& chi) {
    require(chi.conductor() <= mu.r(), Errc::insufficient_level,
            "character conductor p^" + std::to_string(chi.conductor()) + " exceeds level " + std::to_string(mu.r()));
    require(chi.model.finite.p() == mu.ctx()->p(), Errc::invalid_input, "character at a different prime");
    PadicElement s(mu.ctx(), Integer(0));
    for (const auto& [x, c] : mu.coefficients())
        if (!c.is_zero()) s += c * chi.eval(x, mu.level(), mu.ctx());
    return s;
}

PadicElement evaluate_at_character(const ProjectiveMeasure& mu, const AvatarCharacter& chi,
                                   std::optional<long> level) {
    long r = level.value_or(mu.depth());
    if (chi.conductor() > mu.depth())
        fail(Errc::insufficient_level, "character conductor p^" + std::to_string(chi.conductor()) +
                                           " exceeds the available depth " + std::to_string(mu.depth()));
    return evaluate_at_character(mu.at(r), chi);
}

namespace {

PadicElement cyc_value(long x, const RayClassLevel& level, const PadicCtx& ctx, long k, Orientation o) {
    long u = level.reduce(x);
    if (o == Orientation::Geometric) u = level.inverse(u);
    PadicElement e(ctx, Integer(u));
    return k >= 0 ? e.pow(k) : e.inverse().pow(-k);
}

}  // namespace

FiniteLevelMeasure tw_p(const FiniteLevelMeasure& mu, long k, Orientation o) {
    FiniteLevelMeasure out = mu;
    if (k == 0) return out;
    for (long x : mu.level().elements()) out[x] *= cyc_value(x, mu.level(), mu.ctx(), k, o);
    return out;
}

ProjectiveMeasure tw_p(const ProjectiveMeasure& mu, long k, Orientation o) {
    return ProjectiveMeasure::from_top(tw_p(mu.top(), k, o));
}

PadicElement normalization_constant(const PadicCtx& ctx, long r, long n, long alpha, const PadicElement& omega_p) {
    require(omega_p.is_unit(), Errc::invalid_input, "omega_{pi,p}(p) must be a unit");
    require(n >= alpha, Errc::invalid_input, "alpha must not exceed n");
    PadicElement pw = PadicElement(ctx, Integer(ctx->p())).pow(2 * (n - alpha) * r);
    return omega_p.inverse().pow(r) * pw;
}

FiniteLevelMeasure normalize_partial_zeta(const FiniteLevelMeasure& raw, const PadicElement& lambda_p0,
                                          const PadicElement& c_const) {
    if (!lambda_p0.is_unit())
        fail(Errc::not_nearly_ordinary, "lambda_{p,0} is not a p-adic unit");
    if (raw.r() == 0) return raw;
    return raw.scaled(c_const * lambda_p0.inverse().pow(raw.r()));
}

ProjectiveMeasure normalize_partial_zeta(const ProjectiveMeasure& raw, const PadicElement& lambda_p0, long n,
                                         long alpha, const PadicElement& omega_p) {
    ProjectiveMeasure out;
    out.ctx = raw.ctx;
    for (const auto& lv : raw.levels)
        out.levels.push_back(
            normalize_partial_zeta(lv, lambda_p0, normalization_constant(raw.ctx, lv.r(), n, alpha, omega_p)));
    return out;
}

FiniteLevelMeasure teichmuller_idempotent(const PadicCtx& ctx, long r, long j) {
    long p = ctx->p();
    FiniteLevelMeasure e(ctx, r);
    PadicElement inv = PadicElement(ctx, Integer(p - 1)).inverse();
    long jj = mod_l(j, p - 1);
    for (long a = 1; a < p; ++a) {
        PadicElement t = teichmuller(ctx, Integer(a));
        Integer rep = t.value() % Integer(e.level().modulus());
        e[rep.get_si()] += inv * t.inverse().pow(jj);
    }
    return e;
}

FiniteLevelMeasure p_v0_element(const PadicCtx& ctx, long r, long q_v0, std::optional<long> sigma, Orientation o) {
    require(is_prime(q_v0), Errc::invalid_input, "auxiliary place must be a prime");
    require(q_v0 != ctx->p(), Errc::invalid_input, "auxiliary place must be away from p");
    RayClassLevel level(ctx->p(), r);
    long s = sigma ? level.reduce(*sigma) : level.reduce(q_v0);
    if (!sigma && o == Orientation::Geometric) s = level.inverse(s);
    require(level.contains(s), Errc::invalid_input, "sigma must be a unit");
    PadicElement q(ctx, Integer(q_v0));
    FiniteLevelMeasure P = FiniteLevelMeasure::scalar(ctx, r, q);
    P[level.mul(s, s)] -= q.inverse();
    return P;
}

namespace {

struct ComponentImage {
    long j;
    PadicElement value;
};

// image of P under omega^j on mu_{p-1}, trivial on 1 + pZ_p
std::vector<ComponentImage> component_images(const FiniteLevelMeasure& P) {
    const PadicCtx& ctx = P.ctx();
    long p = ctx->p();
    std::vector<ComponentImage> out;
    for (long j = 0; j < p - 1; ++j) {
        PadicElement v(ctx, Integer(0));
        for (const auto& [x, c] : P.coefficients())
            if (!c.is_zero()) v += c * teichmuller(ctx, Integer(x % p)).pow(j);
        out.push_back({j, v});
    }
    return out;
}

PV0Inverse invert_on(const FiniteLevelMeasure& P, const std::vector<ComponentImage>& comps, bool full) {
    const PadicCtx& ctx = P.ctx();
    long r = P.r();
    PV0Inverse res{P, FiniteLevelMeasure(ctx, r), FiniteLevelMeasure(ctx, r), full, {}};
    FiniteLevelMeasure X(ctx, r);
    for (const auto& c : comps) {
        if (!c.value.is_unit()) {
            res.dropped_components.push_back(c.j);
            continue;
        }
        FiniteLevelMeasure ej = teichmuller_idempotent(ctx, r, c.j);
        res.idempotent = res.idempotent + ej;
        X = X + ej.scaled(c.value.inverse());
    }
    // Newton: e - P X squares at each step; it is nilpotent mod p since the p-part of the group is a p-group
    const FiniteLevelMeasure& e = res.idempotent;
    FiniteLevelMeasure two_e = e + e;
    for (int it = 0; it < 64; ++it) {
        FiniteLevelMeasure PX = P * X;
        if (PX == e) {
            res.P_inverse = X;
            return res;
        }
        X = X * (two_e - PX);
    }
    fail(Errc::internal_consistency, "Newton iteration for P_{v0}^{-1} did not terminate");
}

}  // namespace

PV0Inverse p_v0_inverse(const PadicCtx& ctx, long r, long q_v0, std::optional<long> sigma, Orientation o) {
    if (mod_l(q_v0 * q_v0, ctx->p()) == 1)
        fail(Errc::not_a_unit, "(Aux2) fails: q_v0^2 = 1 mod p");
    FiniteLevelMeasure P = p_v0_element(ctx, r, q_v0, sigma, o);
    auto comps = component_images(P);
    for (const auto& c : comps)
        if (!c.value.is_unit())
            fail(Errc::not_a_unit, "P_{v0} vanishes mod p on the omega^" + std::to_string(c.j) + " component");
    return invert_on(P, comps, true);
}

PV0Inverse p_v0_inverse_restricted(const PadicCtx& ctx, long r, long q_v0, std::optional<long> sigma,
                                   Orientation o) {
    if (mod_l(q_v0 * q_v0, ctx->p()) == 1)
        fail(Errc::not_a_unit, "(Aux2) fails: q_v0^2 = 1 mod p");
    FiniteLevelMeasure P = p_v0_element(ctx, r, q_v0, sigma, o);
    auto comps = component_images(P);
    bool all_units = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.value.is_unit(); });
    return invert_on(P, comps, all_units);
}

namespace {

PV0Inverse lp_inverse(const PadicCtx& ctx, long r, const LpConstants& c) {
    return p_v0_inverse_restricted(ctx, r, c.q_v0, std::nullopt, c.orientation);
}

void check_lp_constants(const PadicCtx& ctx, const LpConstants& c, long R) {
    require(c.c_infinity.is_unit(), Errc::invalid_input, "c_inf must be a p-adic unit");
    require(c.lambda_EF.is_unit(), Errc::invalid_input, "lambda_{E/F} must be a p-adic unit");
    require(mod_l(c.xi2, ctx->p()) != 0, Errc::invalid_input, "xi^2 must be a unit at p");
    require(R >= 1, Errc::invalid_input, "empty partial data");
}

}  // namespace

LpResult build_Lp(const ProjectiveMeasure& partial, const LpConstants& c) {
    DistributionReport d = distribution_check(partial);
    require(d.holds, Errc::invalid_input, "partial data fails the distribution property: " + d.first_failure);
    const PadicCtx& ctx = partial.ctx;
    long R = partial.depth();
    check_lp_constants(ctx, c, R);
    LpResult res;
    res.formal_symbols = {"Omega_{pi,p}", "delta(Phi^(0))"};
    res.tw_exponent = c.tw_exponent();
    const FiniteLevelMeasure& top = partial.top();
    PadicElement k = c.c_infinity.inverse() * c.lambda_EF.inverse();
    FiniteLevelMeasure S = (FiniteLevelMeasure::delta(ctx, R, c.xi2) * top).scaled(k);
    FiniteLevelMeasure T = tw_p(S, res.tw_exponent, c.orientation);
    if (c.omega_trivial) {
        PV0Inverse inv = lp_inverse(ctx, R, c);
        res.restricted_inverse = !inv.full;
        res.dropped_components = inv.dropped_components;
        T = T * inv.P_inverse;
    }
    res.measure = ProjectiveMeasure::from_top(T);
    return res;
}

PadicElement build_Lp_direct_value(const ProjectiveMeasure& partial, const LpConstants& c, const AvatarCharacter& chi) {
    const PadicCtx& ctx = partial.ctx;
    long R = partial.depth();
    check_lp_constants(ctx, c, R);
    const FiniteLevelMeasure& top = partial.top();
    const RayClassLevel& lv = top.level();
    AvatarCharacter twisted = chi;
    twisted.model.w += c.tw_exponent();
    // sum_x I~_x (chi eps^e)(sigma_{xi^2 x})
    PadicElement s(ctx, Integer(0));
    for (const auto& [x, v] : top.coefficients())
        if (!v.is_zero()) s += v * twisted.eval(lv.mul(lv.reduce(c.xi2), x), lv, ctx);
    s *= c.c_infinity.inverse() * c.lambda_EF.inverse();
    if (!c.omega_trivial) return s;
    // chi(P^{-1}) = chi(e) / (q - q^{-1} chi(sigma)^2)
    long p = ctx->p();
    long sigma = lv.reduce(c.q_v0);
    if (c.orientation == Orientation::Geometric) sigma = lv.inverse(sigma);
    AvatarCharacter plain = chi;
    plain.orientation = Orientation::Arithmetic;
    PadicElement cs = plain.eval(sigma, lv, ctx);
    PadicElement q(ctx, Integer(c.q_v0));
    PadicElement chiP = q - q.inverse() * cs * cs;
    // component of chi on mu_{p-1}: chi(teich(a)) = teich(a)^j
    PadicElement g = teichmuller(ctx, Integer(ctx->generator_residue()[0]));
    PadicElement chig = plain.eval(Integer(g.value() % Integer(lv.modulus())).get_si(), lv, ctx);
    long j = -1;
    for (long t = 0; t < p - 1 && j < 0; ++t)
        if ((g.pow(t).value() - chig.value()) % p == 0) j = t;
    require(j >= 0, Errc::internal_consistency, "character has no Teichmuller component");
    // the component of P under omega^j decides whether chi survives the restricted inverse
    PadicElement comp = q - q.inverse() * teichmuller(ctx, Integer(mod_l(sigma, p))).pow(2 * j);
    if (!comp.is_unit()) return PadicElement(ctx, Integer(0));
    return s * chiP.inverse();
}

MaminReport mamin_compare(const ProjectiveMeasure& L_alpha, long alpha, const ProjectiveMeasure& L_alpha_prime,
                          long alpha_prime, Orientation o) {
    require(L_alpha.depth() == L_alpha_prime.depth(), Errc::invalid_input, "families of different depth");
    FiniteLevelMeasure lhs = tw_p(L_alpha.top(), alpha_prime - alpha, o);
    const FiniteLevelMeasure& rhs = L_alpha_prime.top();
    MaminReport rep;
    rep.min_valuation_of_difference = L_alpha.ctx->N();
    for (long x : lhs.level().elements()) {
        ++rep.compared;
        PadicElement d = lhs[x] - rhs[x];
        if (!d.is_zero()) {
            ++rep.differing_coefficients;
            rep.min_valuation_of_difference = std::min(rep.min_valuation_of_difference, d.valuation());
        }
    }
    return rep;
}

InterpolationRHS interpolation_rhs(const InterpolationInputs& in) {
    InterpolationRHS out;
    out.formal_symbols = {"Omega(As(pi))"};
    auto note = [&](const std::string& v) { out.violations.push_back(v); };
    if (in.alpha < 0 || in.alpha > in.n) note("invalid-input: need 0 <= alpha <= n");
    if (!criticality_check(in.parity, in.n, in.alpha)) note("non-critical: phi(-1) != (-1)^(n - alpha)");
    if (in.at_p.q != in.p) note("invalid-input: the data at p has residue cardinality " + std::to_string(in.at_p.q));
    auto ramified = [](const SatakePlaceData& d) {
        return d.w.type == RepType::RamifiedPrincipal ||
               (d.kind == PlaceKind::Split && d.wc.type == RepType::RamifiedPrincipal);
    };
    if (ramified(in.at_p)) note("unsupported-case: omega_{pi,p} must be unramified");
    else if (!lambda_constants({in.at_p}, in.p, in.n, 0).nearly_ordinary) note("not-nearly-ordinary at p");
    if (in.conjugate_self_dual && in.alpha == in.n) note("excluded: pi conjugate self-dual and alpha = n");
    if (!in.square_free_conductor) note("unsupported-case: conductor of pi is not square-free");
    if (!out.ok()) return out;
    Complex s_crit(static_cast<double>(in.n - in.alpha + 1), 0);
    out.E_infinity = modified_euler_infty(in.n, in.alpha, in.parity).E();
    ModifiedEulerP mep = modified_euler_p(in.at_p, in.twist_at_p, in.n, in.alpha);
    out.E_p = mep.E.to_complex();
    out.L_p = mep.L_value.to_complex();
    for (const auto& [d, tw] : in.euler_set) {
        if (d.q == in.p) {
            note("invalid-input: p appears in the Euler set");
            continue;
        }
        out.L_euler_set *= asai_L_factor(d, tw).eval(s_crit);
    }
    if (in.auxiliary) {
        const auto& [d, tw] = *in.auxiliary;
        if (!aux2_holds(d.q, in.p)) note("not-a-unit: (Aux2) fails at q_v0 = " + std::to_string(d.q));
        if (ramified(d) || d.w.type != RepType::UnramifiedPrincipal ||
            (d.kind == PlaceKind::Split && d.wc.type != RepType::UnramifiedPrincipal))
            note("invalid-input: pi must be unramified at the auxiliary place");
        if (tw.conductor != 0) note("invalid-input: phi must be unramified at the auxiliary place");
        Complex t = tw.at_uniformizer.to_complex();
        double qd = static_cast<double>(d.q);
        out.auxiliary_factor = qd * (1.0 - d.omega().to_complex() * t * t * std::pow(qd, -2.0 * s_crit.real()));
    }
    out.value = out.E_infinity * out.E_p * out.L_p * out.L_euler_set;
    return out;
}

std::string measure_to_json(const ProjectiveMeasure& mu, int indent) {
    nlohmann::ordered_json j;
    j["p"] = mu.ctx->p();
    j["N"] = mu.ctx->N();
    j["levels"] = nlohmann::ordered_json::array();
    for (const auto& lv : mu.levels) {
        nlohmann::ordered_json L;
        L["r"] = lv.r();
        nlohmann::ordered_json co = nlohmann::ordered_json::object();
        for (const auto& [x, c] : lv.coefficients()) co[std::to_string(x)] = c.to_digits();
        L["coefficients"] = co;
        j["levels"].push_back(L);
    }
    return j.dump(indent);
}

ProjectiveMeasure measure_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::schema, std::string("measure file: ") + e.what());
    }
    auto need = [&](const nlohmann::json& o, const char* key, const std::string& where) -> const nlohmann::json& {
        if (!o.is_object() || !o.contains(key)) fail(Errc::schema, where + ": missing \"" + key + "\"");
        return o.at(key);
    };
    const auto& jp = need(j, "p", "/");
    const auto& jN = need(j, "N", "/");
    const auto& jl = need(j, "levels", "/");
    if (!jp.is_number_integer() || !jN.is_number_integer()) fail(Errc::schema, "/p, /N: integers expected");
    if (!jl.is_array() || jl.empty()) fail(Errc::schema, "/levels: non-empty array expected");
    ProjectiveMeasure mu;
    mu.ctx = PadicContext::make(jp.get<long>(), jN.get<long>(), 1);
    for (std::size_t i = 0; i < jl.size(); ++i) {
        std::string where = "/levels/" + std::to_string(i);
        const auto& jr = need(jl[i], "r", where);
        const auto& jc = need(jl[i], "coefficients", where);
        if (!jr.is_number_integer()) fail(Errc::schema, where + "/r: integer expected");
        long r = jr.get<long>();
        if (r != static_cast<long>(i) + 1) fail(Errc::schema, where + "/r: levels must be 1, 2, ... in order");
        if (!jc.is_object()) fail(Errc::schema, where + "/coefficients: object expected");
        FiniteLevelMeasure lv(mu.ctx, r);
        for (const auto& [key, val] : jc.items()) {
            std::string w = where + "/coefficients/" + key;
            long x = 0;
            try {
                std::size_t used = 0;
                x = std::stol(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail(Errc::schema, w + ": key must be a unit residue");
            }
            if (!lv.level().contains(x)) fail(Errc::schema, w + ": not a unit residue mod p^r");
            if (!val.is_string()) fail(Errc::schema, w + ": digit string expected");
            try {
                lv[x] = PadicElement::from_digits(mu.ctx, val.get<std::string>());
            } catch (const Error& e) {
                fail(Errc::schema, w + ": " + e.what());
            }
        }
        mu.levels.push_back(lv);
    }
    return mu;
}

}  // namespace asai
