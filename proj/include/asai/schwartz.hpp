#pragma once

#include "asai/characters.hpp"
#include "asai/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asai {

// x -> coeff * psi(psi_mult x) * chi(unit part of (x + shift)) * 1[x + shift in p^level O (or p^level O^x)]
struct LocalAtom {
    Cyclotomic coeff = Cyclotomic(1);
    Rational shift = 0;
    long level = 0;
    bool units_only = false;
    std::optional<FiniteOrderCharacter> chi;  // only with units_only
    Rational psi_mult = 0;
};
using LocalFunction = std::vector<LocalAtom>;

enum class SchwartzKind { PAdic, Ordinary, Tame, Auxiliary, Archimedean, Transformed };
const char* schwartz_kind_name(SchwartzKind k);

// product f_x(x) f_y(y) at a finite place of residue characteristic p, or the archimedean Gaussian class
struct SchwartzClass {
    SchwartzKind kind = SchwartzKind::Ordinary;
    long p = 0;
    long r = 0;  // PAdic level
    long k = 0;  // Archimedean weight
    int arch_sign = 1;
    LocalFunction fx, fy;

    static SchwartzClass padic(long p, long r);
    static SchwartzClass ordinary(long p);
    // omega_{pi,v}^{-1}(y) 1_{varpi O x O^x}; omega given on units (its conductor may be 0)
    static SchwartzClass tame(const FiniteOrderCharacter& omega);
    static SchwartzClass auxiliary(long q);
    static SchwartzClass archimedean(long k);

    bool is_archimedean() const { return kind == SchwartzKind::Archimedean; }
    // x, y with p-power denominators
    Cyclotomic eval(const Rational& x, const Rational& y) const;
    Complex eval_arch(double x, double y) const;
};

Cyclotomic eval_local(const LocalFunction& f, long p, const Rational& x);
// int f(s) psi(sign s z) ds with vol(O) = 1
LocalFunction local_fourier(const LocalFunction& f, long p, int sign);

// hat Phi(x, y) = int Phi(s, t) psi(s y - t x) ds dt, closed form
SchwartzClass fourier_transform(const SchwartzClass& phi);
// direct finite sum over (p^{-support} O / p^{invariance} O)^2, valid at x, y in p^{-invariance} O
Cyclotomic finite_fourier_oracle(const SchwartzClass& phi, long invariance, long support, const Rational& x,
                                 const Rational& y);
// hat Phi on the archimedean class by a trapezoid sum over [-L, L]^2
Complex arch_fourier_numeric(const SchwartzClass& phi, double x, double y, int grid = 160, double L = 7.0);

// exact zero test for sum_k counts[k] zeta_{p^e}^k
bool ppower_counts_vanish(const std::vector<long>& counts, long p, long e);

struct IdentityReport {
    long points = 0;
    long failures = 0;
    bool holds() const { return failures == 0; }
    // unit average only: mismatches of the right side with the printed a(p^r) = diag(p^r, 1) translate
    long printed_form_mismatches = 0;
    std::string first_failure;
};

// sum over u in (O/p^r)^x of Phi^(r)(u m, u n) against q^r 1_{p^r O}(m) - q^{r-1} 1_{p^{r-1} O}(m), every (m, n) mod p^M
IdentityReport unit_average(long p, long r, long M);
// sum_{x, y mod p} Phi^(r+1)(m(1 + x p^r) + n y p^r, n) = q^2 psi(m / p^{r+1}) 1_{pO}(m) 1_{pO}(n), every (m, n) mod p^M
IdentityReport section_distribution_check(long p, long r, long M);

// omega_{pi,p}(p^{-r}) prod_v q_v^{2(s+n-alpha) r}
Complex distribution_constant(long r, long n, long alpha, Complex s, const Cyclotomic& omega_p,
                              const std::vector<long>& q_list);

// Eisenstein sections at one place
enum class SectionPlace { Archimedean, Unramified, Tame, Auxiliary };
enum class Coset { BK0, BW2K0, Other };

struct BruhatPoint {
    Complex chars = 1;          // phi1(a) phi2(d)
    Complex chars_swapped = 1;  // phi1(d) phi2(a)
    double ratio = 1;           // |a/d|
    double theta = 0;           // archimedean angle
    Coset coset = Coset::BK0;   // finite places
};

struct SectionData {
    SectionPlace place = SectionPlace::Unramified;
    long q = 0;
    long n_alpha = 0;           // k_alpha = n_alpha + 2
    Complex chi12 = 1;          // phi1 phi2^{-1}(varpi) at an unramified place
    int omega_minus_one = 1;    // omega_pi(-1) at a tame place
};

struct SectionValue {
    Complex F, MF;
};
SectionValue local_section_value(const SectionData& d, const BruhatPoint& g, Complex s);

struct ConstantTermConfig {
    long n_alpha = 0;
    std::optional<long> aux_prime;
    std::vector<long> tame_primes;
    int omega_minus_one = 1;
    BruhatPoint arch_point;
    Coset aux_coset = Coset::BK0;
    std::vector<Coset> tame_cosets;  // defaults to BK0
};
struct ConstantTerm {
    Complex first, second;
    Complex total() const { return first + second; }
};
// phi1 phi2^{-1} = |.|^{n_alpha + 1} (trivial finite part)
ConstantTerm constant_term(const ConstantTermConfig& c, double s);
// limit s -> 0; pole-at-zero if no tame or auxiliary place forces the vanishing
ConstantTerm constant_term_at_zero(const ConstantTermConfig& c);

}  // namespace asai
