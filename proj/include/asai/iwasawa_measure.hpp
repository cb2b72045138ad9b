#pragma once

#include "asai/characters.hpp"
#include "asai/local_factors.hpp"
#include "asai/padic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace asai {

// (Z/p^r)^x, identified with Gal(Q(mu_{p^r})/Q); elements are residues in [1, p^r) prime to p
class RayClassLevel {
public:
    RayClassLevel(long p, long r);
    long p() const { return p_; }
    long r() const { return r_; }
    long modulus() const { return mod_; }
    const std::vector<long>& elements() const { return elems_; }
    long order() const { return static_cast<long>(elems_.size()); }
    bool contains(long u) const;
    long reduce(long u) const;
    long mul(long a, long b) const;
    long inverse(long a) const;
    // image at level r - 1 (r >= 2)
    long project(long u) const;
    // kernel of the projection from level r + 1 onto u
    std::vector<long> fiber(long u) const;

private:
    long p_, r_, mod_;
    std::vector<long> elems_;
};

enum class Orientation { Arithmetic, Geometric };

// element of (O / p^N)[(Z/p^r)^x]
class FiniteLevelMeasure {
public:
    FiniteLevelMeasure(PadicCtx ctx, long r);
    static FiniteLevelMeasure delta(PadicCtx ctx, long r, long x);
    static FiniteLevelMeasure scalar(PadicCtx ctx, long r, const PadicElement& c);

    const PadicCtx& ctx() const { return ctx_; }
    const RayClassLevel& level() const { return level_; }
    long r() const { return level_.r(); }
    const PadicElement& operator[](long x) const;
    PadicElement& operator[](long x);
    const std::map<long, PadicElement>& coefficients() const { return coeff_; }

    FiniteLevelMeasure operator+(const FiniteLevelMeasure& o) const;
    FiniteLevelMeasure operator-(const FiniteLevelMeasure& o) const;
    // group-ring product
    FiniteLevelMeasure operator*(const FiniteLevelMeasure& o) const;
    FiniteLevelMeasure scaled(const PadicElement& c) const;
    bool operator==(const FiniteLevelMeasure& o) const;
    bool operator!=(const FiniteLevelMeasure& o) const { return !(*this == o); }

    FiniteLevelMeasure pushforward() const;
    PadicElement total_mass() const;
    bool is_zero() const;

private:
    PadicCtx ctx_;
    RayClassLevel level_;
    std::map<long, PadicElement> coeff_;
    void check_compatible(const FiniteLevelMeasure& o) const;
};

// levels r = 1..R
struct ProjectiveMeasure {
    PadicCtx ctx;
    std::vector<FiniteLevelMeasure> levels;

    long depth() const { return static_cast<long>(levels.size()); }
    const FiniteLevelMeasure& at(long r) const;
    const FiniteLevelMeasure& top() const { return levels.back(); }
    // the family of pushforwards of a level-R element
    static ProjectiveMeasure from_top(const FiniteLevelMeasure& top);
};

struct DistributionReport {
    bool holds = true;
    std::string first_failure;
    long fibers_checked = 0;
};
DistributionReport distribution_check(const ProjectiveMeasure& mu);

// random level-R coefficients, lower levels by fiber sums
ProjectiveMeasure synth_distribution(std::uint64_t seed, long R, long p, long N);

// p-adic avatar of phi = |.|^w phi_fin evaluated at sigma_x through the residue representative
struct AvatarCharacter {
    HeckeCharacterModel model;
    Orientation orientation = Orientation::Arithmetic;
    long conductor() const { return model.finite.conductor(); }
    PadicElement eval(long x, const RayClassLevel& level, const PadicCtx& ctx) const;
};

PadicElement evaluate_at_character(const FiniteLevelMeasure& mu, const AvatarCharacter& chi);
// evaluated at the given level, or the top level; insufficient-level if the conductor exceeds it
PadicElement evaluate_at_character(const ProjectiveMeasure& mu, const AvatarCharacter& chi,
                                   std::optional<long> level = std::nullopt);

// coefficient at x times eps_cyc(sigma_x)^k, eps_cyc(sigma_x) the representative of x (inverted if geometric)
FiniteLevelMeasure tw_p(const FiniteLevelMeasure& mu, long k, Orientation o = Orientation::Arithmetic);
// twist of the top level, pushed forward
ProjectiveMeasure tw_p(const ProjectiveMeasure& mu, long k, Orientation o = Orientation::Arithmetic);

// c_{r, alpha, 0} = omega_{pi,p}(p)^{-r} p^{2 (n - alpha) r} for F = Q
PadicElement normalization_constant(const PadicCtx& ctx, long r, long n, long alpha, const PadicElement& omega_p);
// coefficientwise c * lambda^{-r}; not-nearly-ordinary if lambda is not a unit
FiniteLevelMeasure normalize_partial_zeta(const FiniteLevelMeasure& raw, const PadicElement& lambda_p0,
                                          const PadicElement& c_const);
ProjectiveMeasure normalize_partial_zeta(const ProjectiveMeasure& raw, const PadicElement& lambda_p0, long n,
                                         long alpha, const PadicElement& omega_p);

// P_{v0} = q (1 - q^{-2} sigma^2) at level r; sigma defaults to Frob_{v0}
struct PV0Inverse {
    FiniteLevelMeasure P, P_inverse;
    // identity in the full ring, otherwise the sum of the Teichmuller idempotents on which P is a unit
    FiniteLevelMeasure idempotent;
    bool full = true;
    std::vector<long> dropped_components;  // exponents j of omega^j where P is not a unit
};
FiniteLevelMeasure p_v0_element(const PadicCtx& ctx, long r, long q_v0, std::optional<long> sigma = std::nullopt,
                                Orientation o = Orientation::Arithmetic);
// full ring inverse; not-a-unit when (Aux2) fails or some Teichmuller component of P vanishes mod p
PV0Inverse p_v0_inverse(const PadicCtx& ctx, long r, long q_v0, std::optional<long> sigma = std::nullopt,
                        Orientation o = Orientation::Arithmetic);
// inverse on the components where P is a unit: P P^{-1} = e
PV0Inverse p_v0_inverse_restricted(const PadicCtx& ctx, long r, long q_v0, std::optional<long> sigma = std::nullopt,
                                   Orientation o = Orientation::Arithmetic);
// e_j = (p - 1)^{-1} sum over mu_{p-1} of omega^{-j}(g) [g]
FiniteLevelMeasure teichmuller_idempotent(const PadicCtx& ctx, long r, long j);

struct LpConstants {
    PadicElement c_infinity;  // c_inf(n, alpha, xi), a unit
    PadicElement lambda_EF;   // Langlands constant image
    long xi2 = 1;             // xi^2 as a unit residue; sigma_{xi^2}
    long n = 0, alpha = 0, m = 0;
    std::optional<long> kappa_bracket;  // [kappa]; n + 2m when not given
    bool omega_trivial = false;
    long q_v0 = 0;            // auxiliary prime, used when omega_trivial
    Orientation orientation = Orientation::Arithmetic;
    long tw_exponent() const { return kappa_bracket.value_or(n + 2 * m) + alpha + 2 * m; }
};

struct LpResult {
    ProjectiveMeasure measure;
    std::vector<std::string> formal_symbols;  // Omega_{pi,p}, delta(Phi^(0)): normalized to 1
    bool restricted_inverse = false;
    std::vector<long> dropped_components;
    long tw_exponent = 0;
};
// delta c_inf^{-1} sigma_{xi^2} lambda^{-1} sum_x I~_{R,x} sigma_x, twisted by Tw^{[kappa]+alpha+2m}, times P^{-1}
LpResult build_Lp(const ProjectiveMeasure& partial, const LpConstants& c);
// the same value at chi assembled directly from the top-level coefficients
PadicElement build_Lp_direct_value(const ProjectiveMeasure& partial, const LpConstants& c, const AvatarCharacter& chi);

// Tw^{alpha' - alpha}(L^alpha) against L^{alpha'}; reported without a verdict
struct MaminReport {
    long differing_coefficients = 0;
    long compared = 0;
    long min_valuation_of_difference = 0;
};
MaminReport mamin_compare(const ProjectiveMeasure& L_alpha, long alpha, const ProjectiveMeasure& L_alpha_prime,
                          long alpha_prime, Orientation o = Orientation::Arithmetic);

// E_inf E_p L(0, As (x) phi) / Omega with L truncated to p and the supplied Euler set
struct InterpolationInputs {
    long p = 0;
    long n = 0, alpha = 0;
    int parity = 1;  // phi(-1)
    SatakePlaceData at_p;
    LocalTwist twist_at_p;
    std::vector<std::pair<SatakePlaceData, LocalTwist>> euler_set;
    std::optional<std::pair<SatakePlaceData, LocalTwist>> auxiliary;
    bool conjugate_self_dual = false;
    bool square_free_conductor = true;
};
struct InterpolationRHS {
    Complex E_infinity = 0, E_p = 0, L_p = 0, L_euler_set = 1, value = 0;
    // q_v0 (1 - omega phi^2(varpi) q^{-2(n-alpha+1)}), reported separately
    std::optional<Complex> auxiliary_factor;
    std::vector<std::string> violations;
    std::vector<std::string> formal_symbols;
    bool ok() const { return violations.empty(); }
};
InterpolationRHS interpolation_rhs(const InterpolationInputs& in);

// JSON: { "p", "N", "levels": [ { "r", "coefficients": { "<unit residue>": "<p-adic digits>" } } ] }
std::string measure_to_json(const ProjectiveMeasure& mu, int indent = 2);
ProjectiveMeasure measure_from_json(const std::string& text);

}  // namespace asai
