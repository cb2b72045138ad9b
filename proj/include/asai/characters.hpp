#pragma once

#include "asai/cyclotomic.hpp"
#include "asai/padic.hpp"

#include <memory>
#include <vector>

namespace asai {

// character of (Z/p^r)^x (base field Q), fixed by the image of the smallest primitive root
class FiniteOrderCharacter {
public:
    FiniteOrderCharacter() = default;
    // infinity_sign is checked against the value at -1
    FiniteOrderCharacter(long p, long r, const RootOfUnity& generator_image, int infinity_sign);
    FiniteOrderCharacter(long p, long r, const RootOfUnity& generator_image);
    static FiniteOrderCharacter trivial(long p, long r = 1);

    long p() const { return p_; }
    long r() const { return r_; }
    long modulus() const { return ipow(p_, r_); }
    long generator() const { return g_; }
    const RootOfUnity& generator_image() const { return image_; }
    int infinity_sign() const { return sign_; }

    // u coprime to p
    RootOfUnity value(long u) const;
    // discrete log of u to the base generator()
    long dlog(long u) const;
    long conductor() const;
    bool is_trivial() const { return image_.reduced().order() == 1; }

    FiniteOrderCharacter inverse() const;
    FiniteOrderCharacter operator*(const FiniteOrderCharacter& o) const;
    FiniteOrderCharacter pow(long k) const;
    // same character viewed modulo p^r2, r2 >= conductor
    FiniteOrderCharacter with_modulus(long r2) const;

    // sum over (Z/p^c)^x of chi(u) psi(a u / p^c); 1 when unramified
    Cyclotomic gauss_sum(long psi_shift = 1) const;
    // q^{-s c} tau(chi^{-1})
    Cyclotomic epsilon_factor(long s) const;
    Complex epsilon_factor(Complex s) const;

private:
    long p_ = 3, r_ = 0, g_ = 1;
    RootOfUnity image_;
    int sign_ = 1;
    std::shared_ptr<const std::vector<long>> dlog_;
    void init();
};

// phi = |.|^w phi_fin
struct HeckeCharacterModel {
    FiniteOrderCharacter finite;
    long w = 0;
};

// x = (sign at infinity) * (unit u at p); value x_p^w i_p(x_inf^{-w} phi(x))
PadicElement padic_avatar_eval(const HeckeCharacterModel& phi, long u, const PadicCtx& ctx, int inf_sign = 1);
bool criticality_check(const HeckeCharacterModel& phi, long n, long alpha);
bool criticality_check(int infinity_sign, long n, long alpha);

// local twist at a place of residue cardinality q: conductor exponent, value at the uniformizer
// (1 for ramified p-power-conductor characters) and the Gauss sums of phi and phi^{-1}
struct LocalTwist {
    long q = 1;
    long conductor = 0;
    Cyclotomic at_uniformizer = Cyclotomic(1);
    Cyclotomic tau = Cyclotomic(1);
    Cyclotomic tau_inverse = Cyclotomic(1);

    static LocalTwist unramified(long q, const Cyclotomic& t) { return {q, 0, t, Cyclotomic(1), Cyclotomic(1)}; }
    static LocalTwist from_character(const FiniteOrderCharacter& chi);
    bool ramified() const { return conductor > 0; }
    LocalTwist inverse() const;
    // X^c tau(phi^{-1}) with X = q^{-s}
    Cyclotomic epsilon(const Cyclotomic& X) const;
};

}  // namespace asai
