#pragma once

#include "asai/cyclotomic.hpp"

#include <map>
#include <string>

namespace asai {

// finite sum of c_k X^k, k in Z, cyclotomic coefficients; zero terms are never stored
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Cyclotomic& c) { add_term(0, c); }
    LaurentPoly(long c) : LaurentPoly(Cyclotomic(c)) {}
    static LaurentPoly monomial(const Cyclotomic& c, int k);
    // 1 - a X^k
    static LaurentPoly one_minus(const Cyclotomic& a, int k = 1);

    const std::map<int, Cyclotomic>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int min_degree() const;
    int max_degree() const;
    Cyclotomic coeff(int k) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // X -> a X^e with e = +-1
    LaurentPoly substitute(const Cyclotomic& a, int e) const;

    Complex eval(Complex x) const;
    // j-th derivative in X
    Complex eval_derivative(Complex x, int j) const;
    Cyclotomic eval(const Cyclotomic& x) const;
    // sum |c_k| |x|^k, scale for zero tests
    double magnitude(Complex x) const;
    // order of vanishing at the exact point x (x nonzero)
    int vanishing_order(const Cyclotomic& x) const;
    // exact quotient by (X - x) when x is a root
    LaurentPoly divide_linear(const Cyclotomic& x) const;

    std::string to_string() const;

private:
    void add_term(int k, const Cyclotomic& c);
    std::map<int, Cyclotomic> t_;
};

// num(X)/den(X) with X = q^{-s}
class RationalFunctionInQs {
public:
    RationalFunctionInQs() : num_(1), den_(1), q_(1) {}
    RationalFunctionInQs(LaurentPoly num, LaurentPoly den, long q);
    static RationalFunctionInQs constant(const Cyclotomic& c, long q) { return {LaurentPoly(c), LaurentPoly(1), q}; }
    // 1/(1 - a X^k)
    static RationalFunctionInQs euler(const Cyclotomic& a, long q, int k = 1);

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    long q() const { return q_; }

    RationalFunctionInQs operator*(const RationalFunctionInQs& o) const;
    RationalFunctionInQs operator/(const RationalFunctionInQs& o) const;
    RationalFunctionInQs inverse() const;
    // exact equality as rational functions (cross multiplication)
    bool equals(const RationalFunctionInQs& o) const;

    // s -> 1 - s, i.e. X -> q^{-1} X^{-1}
    RationalFunctionInQs reflect() const;
    // s -> s + a for integer a, i.e. X -> q^{-a} X
    RationalFunctionInQs shift(long a) const;

    // pole-at-s raised with multiplicity when the denominator vanishes to higher order
    Complex eval(Complex s) const;
    Complex eval_X(Complex x) const;
    Cyclotomic eval_X(const Cyclotomic& x) const;
    // s an integer so that X = q^{-s} is rational
    Cyclotomic eval_exact(long s) const;

    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    long q_;
};

}  // namespace asai
