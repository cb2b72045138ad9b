#pragma once

#include "asai/characters.hpp"
#include "asai/cyclotomic.hpp"
#include "asai/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asai {

enum class RepType { UnramifiedPrincipal, Special, RamifiedPrincipal };
const char* rep_type_name(RepType t);

// local component of pi at a place w of E with residue cardinality q_w
struct GL2Component {
    RepType type = RepType::UnramifiedPrincipal;
    // UnramifiedPrincipal: Satake pair, beta the nearly ordinary one; Special: eta q_w^{1/2}, eta q_w^{-1/2};
    // RamifiedPrincipal: alpha = mu(varpi) of the unramified character mu, beta unused
    RadicalMonomial alpha, beta;
    int eta = 1;
    // RamifiedPrincipal: nu = nu0^{nu_id} times an unramified character with value nu_value at varpi,
    // nu0 a fixed ramified character of order nu_mod
    long nu_id = 1, nu_mod = 2;
    RadicalMonomial nu_value;

    static GL2Component principal(const RadicalMonomial& a, const RadicalMonomial& b);
    static GL2Component special(int eta, long q_w);
    static GL2Component ramified_principal(const RadicalMonomial& mu, long nu_id, long nu_mod,
                                           const RadicalMonomial& nu_value = RadicalMonomial(1));
    // central character value at varpi_w, when unramified
    RadicalMonomial central_value() const;
};

enum class PlaceKind { Split, Inert };

struct SatakePlaceData {
    PlaceKind kind = PlaceKind::Split;
    long q = 0;
    GL2Component w, wc;
    // omega_{pi,v}(varpi_v); derived from the components unless supplied
    std::optional<RadicalMonomial> omega_override;

    static SatakePlaceData split(long q, GL2Component w, GL2Component wc);
    static SatakePlaceData inert(long q, GL2Component w);
    long q_w() const { return kind == PlaceKind::Split ? q : q * q; }
    RadicalMonomial omega() const;
    // alpha_{pi_v}, beta_{pi_v}: products over w | v
    RadicalMonomial alpha_v() const;
    RadicalMonomial beta_v() const;
    void validate() const;
};

// Weil-Deligne model: blocks Sp_n(chi) with Frobenius eigenvalues top, top q^{-1}, ..., top q^{-(n-1)},
// plus two-dimensional irreducible pieces with characteristic polynomial 1 - c X^2
struct WDBlock {
    Cyclotomic top;
    int size = 1;
    long ram_id = 0, ram_mod = 1;
    bool ramified() const { return mod_l(ram_id, ram_mod) != 0; }
};

struct WDRep {
    long q = 1;
    std::vector<WDBlock> blocks;
    std::vector<Cyclotomic> pairs;
    int dimension() const;
    WDRep dual() const;
    // determinant of Frobenius on the whole space
    Cyclotomic det_frobenius() const;
};

WDRep gl2_wd(const GL2Component& c, long q_w);
WDRep tensor(const WDRep& a, const WDRep& b);
WDRep asai_wd(const SatakePlaceData& d);
WDRep unramified_character_wd(const Cyclotomic& value, long q);

RationalFunctionInQs wd_L_factor(const WDRep& rho, const LocalTwist& twist);
// epsilon(s, rho (x) twist) as a monomial in X; ramified blocks are not supported
LaurentPoly wd_epsilon(const WDRep& rho, const LocalTwist& twist);
RationalFunctionInQs wd_gamma(const WDRep& rho, const LocalTwist& twist);

RationalFunctionInQs asai_L_factor(const SatakePlaceData& d, const LocalTwist& twist);
// 1 / prod over the four pairs (x, y) of (1 - x y t X) built directly from the Satake parameters
RationalFunctionInQs rankin_selberg_direct(const SatakePlaceData& d, const LocalTwist& twist);

// gamma = epsilon * L(1 - s, dual) / L(s)
struct GammaFactor {
    RationalFunctionInQs L_s, L_dual;
    LaurentPoly epsilon;
    RationalFunctionInQs as_function() const;
    // indeterminate-value when L(s) and L(1-s, dual) both have poles
    Complex eval(Complex s) const;
};
GammaFactor gamma_factor(const RationalFunctionInQs& L_s, const RationalFunctionInQs& L_dual_at_s,
                         const LaurentPoly& epsilon);
GammaFactor asai_gamma_factor(const SatakePlaceData& d, const LocalTwist& twist);

struct ModifiedEulerP {
    // gamma(s, chi_alpha phi) / gamma(s, As (x) phi) and the explicit case formula, as functions of X
    RationalFunctionInQs definitional, explicit_form;
    bool rational_identity = false;
    // values at s = n - alpha + 1
    Cyclotomic EL_definitional, EL_explicit, L_value, E;
    bool values_agree = false;
};
ModifiedEulerP modified_euler_p(const SatakePlaceData& d, const LocalTwist& twist, long n, long alpha);
// the case formula alone; literal_inert_phi keeps the printed first power of phi in the inert c=0 denominator
RationalFunctionInQs modified_euler_p_explicit(const SatakePlaceData& d, const LocalTwist& twist,
                                               bool literal_inert_phi = false);

// archimedean
struct GammaFactorTerm {
    bool complex_type = false;  // Gamma_C if true, Gamma_R otherwise
    Rational shift;
    int power = 1;
};
struct GammaProduct {
    std::vector<GammaFactorTerm> factors;
    Complex prefactor = 1;
    Rational two_power_slope = 0;  // factor 2^{slope s}
    Complex eval(Complex s) const;
    long double eval_real(long double s) const;
};

struct ArchimedeanL {
    GammaProduct L;
    // epsilon_infinity as a power of sqrt(-1)
    long epsilon_ipow = 0;
};
// one real place (t = 1); parity is phi(-1)
ArchimedeanL L_infty_pair(long n, long alpha, int parity);

struct ModifiedEulerInfty {
    long ipow = 0;          // E_inf L_inf(0) = sqrt(-1)^ipow * EL_real
    long double EL_real = 0;
    long double L0 = 0;     // L_inf(0)
    long double E_real = 0; // E_inf = sqrt(-1)^ipow * E_real
    Complex EL() const;
    Complex E() const;
};
ModifiedEulerInfty modified_euler_infty(long n, long alpha, int parity);

struct LambdaConstants {
    std::vector<RadicalMonomial> lambda_w;
    RadicalMonomial lambda_p, lambda_p0;
    Rational valuation_p0;
    bool nearly_ordinary = false;
};
// p-places of F = Q; kappa_bracket = [kappa], m as in the weight data
LambdaConstants lambda_constants(const std::vector<SatakePlaceData>& p_places, long p, long kappa_bracket, long m);

}  // namespace asai
