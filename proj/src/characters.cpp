#include "asai/characters.hpp"

#include "asai/error.hpp"

#include <cmath>

namespace asai {

FiniteOrderCharacter::FiniteOrderCharacter(long p, long r, const RootOfUnity& generator_image, int infinity_sign)
    : p_(p), r_(r), image_(generator_image.reduced()), sign_(infinity_sign) {
    require(infinity_sign == 1 || infinity_sign == -1, Errc::invalid_input, "infinity sign must be +-1");
    init();
}

FiniteOrderCharacter::FiniteOrderCharacter(long p, long r, const RootOfUnity& generator_image)
    : p_(p), r_(r), image_(generator_image.reduced()), sign_(0) {
    init();
}

FiniteOrderCharacter FiniteOrderCharacter::trivial(long p, long r) { return FiniteOrderCharacter(p, r, RootOfUnity()); }

void FiniteOrderCharacter::init() {
    require(p_ > 2 && is_prime(p_), Errc::invalid_input, "p must be an odd prime");
    require(r_ >= 0 && r_ <= 12, Errc::invalid_input, "level r out of range");
    require(std::pow(static_cast<double>(p_), static_cast<double>(r_)) < 2e7, Errc::invalid_input,
            "modulus p^r too large for the tabulated group model");
    long M = modulus();
    long order = r_ == 0 ? 1 : M / p_ * (p_ - 1);
    require(order % image_.order() == 0, Errc::invalid_input,
            "generator image of order " + std::to_string(image_.order()) + " does not divide " + std::to_string(order));
    g_ = r_ == 0 ? 1 : primitive_root_mod_prime_power(p_, r_);
    auto table = std::make_shared<std::vector<long>>(M, -1);
    long x = 1 % M;
    for (long j = 0; j < order; ++j) {
        (*table)[x] = j;
        x = x * g_ % M;
    }
    if (M == 1) (*table)[0] = 0;
    dlog_ = table;
    int s = 1;
    if (r_ > 0) {
        RootOfUnity m1 = image_.pow(dlog(M - 1)).reduced();
        s = m1.order() == 1 ? 1 : -1;
    }
    if (sign_ == 0) sign_ = s;
    require(sign_ == s, Errc::invalid_input, "infinity sign disagrees with the value at -1");
}

long FiniteOrderCharacter::dlog(long u) const {
    long M = modulus();
    long v = mod_l(u, M);
    require(M == 1 || v % p_ != 0, Errc::invalid_input, "argument not coprime to p");
    return (*dlog_)[v];
}

RootOfUnity FiniteOrderCharacter::value(long u) const { return image_.pow(dlog(u)).reduced(); }

long FiniteOrderCharacter::conductor() const {
    long M = modulus();
    for (long c = 0; c < r_; ++c) {
        long step = ipow(p_, c);
        bool trivial_on = true;
        for (long u = 1; u < M && trivial_on; u += step) {
            if (u % p_ == 0) continue;
            if (!value(u).is_one()) trivial_on = false;
        }
        if (trivial_on) return c;
    }
    return r_;
}

FiniteOrderCharacter FiniteOrderCharacter::inverse() const { return FiniteOrderCharacter(p_, r_, image_.inverse()); }

FiniteOrderCharacter FiniteOrderCharacter::pow(long k) const { return FiniteOrderCharacter(p_, r_, image_.pow(k)); }

FiniteOrderCharacter FiniteOrderCharacter::operator*(const FiniteOrderCharacter& o) const {
    require(p_ == o.p_, Errc::invalid_input, "characters at different primes");
    long r = std::max(r_, o.r_);
    FiniteOrderCharacter a = with_modulus(r), b = o.with_modulus(r);
    return FiniteOrderCharacter(p_, r, a.image_ * b.image_);
}

FiniteOrderCharacter FiniteOrderCharacter::with_modulus(long r2) const {
    if (r2 == r_) return *this;
    require(r2 >= conductor(), Errc::invalid_input, "modulus below the conductor");
    if (r2 == 0) return trivial(p_, 0);
    long g2 = primitive_root_mod_prime_power(p_, r2);
    RootOfUnity img = r_ == 0 ? RootOfUnity() : value(g2 % modulus());
    return FiniteOrderCharacter(p_, r2, img);
}

Cyclotomic FiniteOrderCharacter::gauss_sum(long psi_shift) const {
    long c = conductor();
    if (c == 0) return Cyclotomic(1);
    long pc = ipow(p_, c);
    long L = lcm_l(image_.order(), pc);
    std::vector<long> counts(L, 0);
    for (long u = 1; u < pc; ++u) {
        if (u % p_ == 0) continue;
        RootOfUnity z = value(u);
        long e = z.exponent() * (L / z.order()) + mod_l(psi_shift * u, pc) * (L / pc);
        counts[mod_l(e, L)] += 1;
    }
    return Cyclotomic::from_int_powers(L, counts);
}

Cyclotomic FiniteOrderCharacter::epsilon_factor(long s) const {
    long c = conductor();
    if (c == 0) return Cyclotomic(1);
    return Cyclotomic(rpow(Rational(p_), -s * c)) * inverse().gauss_sum(1);
}

Complex FiniteOrderCharacter::epsilon_factor(Complex s) const {
    long c = conductor();
    if (c == 0) return 1;
    return std::exp(-s * static_cast<double>(c) * std::log(static_cast<double>(p_))) *
           inverse().gauss_sum(1).to_complex();
}

PadicElement padic_avatar_eval(const HeckeCharacterModel& phi, long u, const PadicCtx& ctx, int inf_sign) {
    const auto& chi = phi.finite;
    require(ctx->p() == chi.p(), Errc::invalid_input, "p-adic context at a different prime");
    require(mod_l(u, chi.p()) != 0, Errc::invalid_input, "class representative must be a unit at p");
    require(inf_sign == 1 || inf_sign == -1, Errc::invalid_input, "sign at infinity must be +-1");
    PadicElement v = PadicElement(ctx, Integer(u)).pow(phi.w) * embed_padic(chi.value(u), ctx);
    if (inf_sign == -1 && ((phi.w % 2 != 0) != (chi.infinity_sign() == -1))) v = -v;
    return v;
}

bool criticality_check(int infinity_sign, long n, long alpha) {
    int parity = ((n - alpha) % 2 == 0) ? 1 : -1;
    return parity * infinity_sign == 1;
}

bool criticality_check(const HeckeCharacterModel& phi, long n, long alpha) {
    return criticality_check(phi.finite.infinity_sign(), n, alpha);
}

LocalTwist LocalTwist::from_character(const FiniteOrderCharacter& chi) {
    LocalTwist t;
    t.q = chi.p();
    t.conductor = chi.conductor();
    if (t.conductor > 0) {
        t.tau = chi.gauss_sum(1);
        t.tau_inverse = chi.inverse().gauss_sum(1);
    }
    return t;
}

LocalTwist LocalTwist::inverse() const { return {q, conductor, at_uniformizer.inverse(), tau_inverse, tau}; }

Cyclotomic LocalTwist::epsilon(const Cyclotomic& X) const {
    if (conductor == 0) return Cyclotomic(1);
    return X.pow(conductor) * tau_inverse;
}

}  // namespace asai
