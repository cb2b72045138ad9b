#pragma once

#include "asai/cyclotomic.hpp"
#include "asai/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace asai {

enum class Var { X = 0, Y, Xc, Yc, U, V, A, B };
constexpr int kNumVars = 8;

// polynomial in the eight fixed indeterminates with rational coefficients
class HomogeneousPoly {
public:
    using Exponents = std::array<int, kNumVars>;

    HomogeneousPoly() = default;
    HomogeneousPoly(const Rational& c);
    static HomogeneousPoly var(Var v);
    static HomogeneousPoly monomial(const Rational& c, const Exponents& e);
    // c X^a Y^b
    static HomogeneousPoly xy(const Rational& c, int a, int b);

    const std::map<Exponents, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(const Exponents& e) const;
    // total degree in the pair (x, y); -1 when the pair degree is not constant
    int pair_degree(Var x, Var y) const;

    HomogeneousPoly operator+(const HomogeneousPoly& o) const;
    HomogeneousPoly operator-(const HomogeneousPoly& o) const;
    HomogeneousPoly operator*(const HomogeneousPoly& o) const;
    HomogeneousPoly operator*(const Rational& c) const;
    HomogeneousPoly pow(int e) const;
    bool operator==(const HomogeneousPoly& o) const { return t_ == o.t_; }

    HomogeneousPoly derivative(Var v) const;
    // replace the variable `from` by `to`
    HomogeneousPoly rename(Var from, Var to) const;
    // coefficient of v^k, as a polynomial in the remaining variables
    HomogeneousPoly coeff_in(Var v, int k) const;

    std::string to_string() const;

private:
    void add(const Exponents& e, const Rational& c);
    std::map<Exponents, Rational> t_;
};

// [P, Q]_n on degree-n polynomials in (x, y)
Rational pairing_n(const HomogeneousPoly& P, const HomogeneousPoly& Q, int n, Var x = Var::X, Var y = Var::Y);
// [P, (x + c y)^n]_n = P(-c, 1)
Cyclotomic pairing_with_linear_power(const HomogeneousPoly& P, const Cyclotomic& c, int n, Var x = Var::X,
                                     Var y = Var::Y);
// dual of x^a y^{n-a}
HomogeneousPoly dual_element(int a, int n, Var x = Var::X, Var y = Var::Y);

struct VPolynomialTriple {
    int n = 0;
    // P_{-2}, P_0, P_2 as polynomials in X, Y, Xc, Yc, U, V
    std::map<int, HomogeneousPoly> P;
    // (i, j) -> v_i(j), a polynomial in X, Y, Xc, Yc
    std::map<std::pair<int, int>, HomogeneousPoly> v;
    // re-expand sum_i v_i(j) * basis_i^vee against U, V
    HomogeneousPoly reexpand(int j) const;
};

// exponent of U in the monomial whose dual carries index i: U^{n+1+i} V^{n+1-i}
VPolynomialTriple v_polynomials(int n);

// (1/alpha!^2) nabla^alpha P with nabla = d/dX d/dYc - d/dXc d/dY, then Xc -> X, Yc -> Y
HomogeneousPoly upsilon(const HomogeneousPoly& P, int alpha, int n);

// closed form of C(alpha, i); zero off matching parity
Rational c_constant(int n, int alpha, int i);
// [Upsilon^alpha v_i(j), (X - sqrt(-1) Y)^{2n-2alpha}] from the definitions, in Q(sqrt(-1))
Cyclotomic upv_pairing_value(const VPolynomialTriple& vt, int alpha, int i, int j);
Cyclotomic upv_pairing_value(int n, int alpha, int i, int j);
// the closed form stated for the same pairing
Cyclotomic upv_closed_form_value(int n, int alpha, int i, int j);
// C(alpha, i) through the pairing route: L_0 + sqrt(-1) L_{-2} - sqrt(-1) L_2
Cyclotomic c_constant_definitional(const VPolynomialTriple& vt, int alpha, int i);
Cyclotomic c_constant_definitional(int n, int alpha, int i);
// throws internal-consistency if the two routes disagree
Rational c_constant_checked(int n, int alpha, int i);

struct CComparison {
    int n = 0;
    long compared = 0, equal = 0;
    // on matching parity: definitional / closed, when nonzero
    long ratio_sign_plus = 0, ratio_sign_minus = 0, ratio_other = 0;
    // off parity: definitional nonzero although closed form is 0
    long odd_parity_nonzero = 0;
    // definitional == (-1)^{n+alpha} closed on matching parity
    bool sign_relation_holds = true;
};
CComparison compare_c_constants(int n);

// rank of the Gram matrix of pairing_n on monomials
long pairing_gram_rank(int n);
// rank of the matrix of Upsilon = sum over alpha on the monomial basis of L(n) x L(n)
long upsilon_rank(int n);

// rank of a rational matrix (Gaussian elimination)
long rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace asai
