#pragma once

#include "asai/characters.hpp"
#include "asai/local_factors.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace asai {

struct QuadratureConfig {
    double epsabs = 1e-12;
    double epsrel = 1e-12;
    std::size_t limit = 2000;
};

// K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du
double kbessel(double nu, double x, const QuadratureConfig& cfg = {});

// int_0^inf K_nu(mu a) a^s da/a = 2^{s-2} mu^{-s} Gamma((s+nu)/2) Gamma((s-nu)/2)
Complex kbessel_mellin(double nu, double mu, Complex s);
// the same integral by nested quadrature over a = e^y; real s only
double kbessel_mellin_quadrature(double nu, double mu, double s, const QuadratureConfig& cfg = {});

// int_0^inf t^{2s} Phi_inf(0, t) d^x t with Phi_inf(x, y) = 2^{-k}(x + iy)^k e^{-pi(x^2+y^2)}, k = 2(n - alpha + 1)
Complex arch_t_integral(Complex s, long n, long alpha);
Complex arch_t_integral_quadrature(double s, long n, long alpha, const QuadratureConfig& cfg = {});

// a-integral attached to the i-th Whittaker component; zero unless i = alpha mod 2. k is the weight n + 2
Complex arch_a_integral(Complex s, long n, long alpha, long i, long disc, long k);

struct GhateSides {
    long double lhs = 0, rhs = 0;
    // relative error, absolute when rhs vanishes
    long double error() const;
};
GhateSides ghate_identity(long n, long alpha, long double s);
// n = 0 right side with Gamma(s) expanded by the duplication formula: reduces to Gamma((s+1)/2)^2
long double ghate_rhs_n0_duplicated(long double s);

struct ArchZetaResult {
    Complex summation;  // 2^{2 r_F} sum_i C(alpha, i) * a-integral * t-integral at s = n - alpha + 1
    Complex product;    // c_inf * E_inf * L_inf(0)
    Complex c_infinity;
    double ratio() const;  // |summation / product|, signed by the real part
};
Complex c_infinity(long n, long alpha, long disc);
// parity is phi(-1); must equal (-1)^{n-alpha}
ArchZetaResult arch_zeta_integral(long n, long alpha, long disc, int parity);

struct LocalIntegralResult {
    Complex closed_form;
    std::optional<Complex> oracle;
    std::string oracle_route;
    int truncation = 0;
    double tail_bound = 0;
    // extra factor carried alongside (auxiliary place: q (1 - omega phi^2 q^{-2s}))
    std::optional<Complex> removable_factor;
    double rel_diff() const;
};

// W(diag(varpi^m, 1)) q_w^{m/2} for the new vector of one GL2 component
Complex whittaker_coefficient(const GL2Component& c, int m);

// unramified place: L(s, As (x) phi); oracle by truncated Whittaker summation times L(2s, omega phi^2).
// The oracle is only attached when both components are unramified principal series
LocalIntegralResult unramified_local_integral(const SatakePlaceData& d, const LocalTwist& twist, Complex s,
                                              int M = 60, double tol = 1e-13);

// tame place (v | N, v not above p): (1/(q+1)) times the case formula. literal_printed drops phi from the
// both-special correction as printed
LocalIntegralResult tame_local_integral(const SatakePlaceData& d, const LocalTwist& twist, Complex s,
                                        bool literal_printed = false, int M = 200);
RationalFunctionInQs tame_integral_function(const SatakePlaceData& d, const LocalTwist& twist,
                                            bool literal_printed = false);
long gl2_k0_index(long q);

// (Aux2) q^2 != 1 mod p
bool aux2_holds(long q_v0, long p);
LocalIntegralResult auxiliary_local_integral(const SatakePlaceData& d, const LocalTwist& twist, long p, Complex s,
                                             int M = 200);

// Rankin-Selberg gamma: phi(xi^2) lambda^{-1} gamma(s, As (x) phi)
struct GammaRS {
    Complex value;
    // omega_pi(xi) phi(xi^2) |xi^2|^{s-1/2} lambda^{-1} gamma before simplification
    Complex unsimplified;
};
// phi(xi^2) for the local character at p: unit part through the finite character, p-part through phi(p)
Cyclotomic character_at(const FiniteOrderCharacter& phi, const Cyclotomic& phi_at_p, const Rational& x);
GammaRS gamma_RS(const SatakePlaceData& d, const LocalTwist& twist, const Cyclotomic& phi_xi2, Complex s,
                 const Cyclotomic& lambda = Cyclotomic(1), const Cyclotomic& omega_xi = Cyclotomic(1),
                 const Rational& abs_xi2 = Rational(1));

struct PLocalConfig {
    Rational xi2 = Rational(-3, 4);  // xi^2 = -D/4
    Cyclotomic lambda = Cyclotomic(1);
    Cyclotomic phi_at_p = Cyclotomic(1);  // phi(p); forced to 1 for ramified phi
};
// [GL2(O) : K(p^r)] = q^{4r} zeta(1)^{-1} zeta(2)^{-1}
Rational gl2_kr_index(long q, long r);
// closed form: index^{-1} phi^2(p^r) gamma(s, chi_alpha phi) / gamma_RS; oracle: the Tate-integral chain
LocalIntegralResult p_local_integral(const SatakePlaceData& d, const FiniteOrderCharacter& phi, long r, Complex s,
                                     const PLocalConfig& cfg = {});
// value at s = n - alpha + 1 through the modified Euler factor: index^{-1} phi(xi^2)^{-1} lambda E L(0)
Complex p_local_at_critical(const SatakePlaceData& d, const FiniteOrderCharacter& phi, long r, long n, long alpha,
                            const PLocalConfig& cfg = {});

}  // namespace asai
