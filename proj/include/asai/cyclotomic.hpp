#pragma once

#include "asai/rational.hpp"

#include <complex>
#include <vector>

namespace asai {

using Complex = std::complex<double>;

class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(long order, long exponent);

    long order() const { return order_; }
    long exponent() const { return exponent_; }
    // same root written with the smallest possible order
    RootOfUnity reduced() const;

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const { return RootOfUnity(order_, -exponent_); }
    RootOfUnity pow(long k) const { return RootOfUnity(order_, exponent_ * k); }
    bool operator==(const RootOfUnity& o) const;
    bool is_one() const { return exponent_ == 0; }

    Complex to_complex() const;

    static RootOfUnity minus_one() { return RootOfUnity(2, 1); }
    static RootOfUnity i() { return RootOfUnity(4, 1); }

private:
    long order_ = 1;
    long exponent_ = 0;
};

// Element of Q(zeta_m) stored in the power basis 1, z, ..., z^{phi(m)-1}, z = exp(2 pi i/m).
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_{Rational(0)} {}
    Cyclotomic(const Rational& r) : m_(1), c_{r} {}
    Cyclotomic(long v) : m_(1), c_{Rational(v)} {}
    explicit Cyclotomic(const RootOfUnity& z);

    // sum_k coeffs[k] z^k with z of order m; coeffs may be longer than phi(m)
    static Cyclotomic from_powers(long m, const std::vector<Rational>& coeffs);
    static Cyclotomic from_int_powers(long m, const std::vector<long>& coeffs);
    static Cyclotomic zeta(long m, long k = 1) { return Cyclotomic(RootOfUnity(m, k)); }
    // positive square root of n > 0 via quadratic Gauss sums; n < 0 gives i*sqrt(|n|)
    static Cyclotomic sqrt_int(long n);

    long order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclotomic lift(long L) const;
    // rewrite in the smallest Q(zeta_d) containing the element
    Cyclotomic simplify() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;
    // complex conjugation z -> z^{-1}
    Cyclotomic conj() const;
    // Galois action z -> z^a, gcd(a, m) = 1
    Cyclotomic galois(long a) const;

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;
    Complex to_complex() const;
    std::complex<long double> to_complex_ld() const;

    std::string to_string() const;

private:
    Cyclotomic(long m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
    long m_;
    std::vector<Rational> c_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) { return Cyclotomic(r) * c; }

// integer coefficients of the m-th cyclotomic polynomial, constant term first
const std::vector<Integer>& cyclotomic_polynomial(long m);

// coeff * zeta * sqrt(rad) with rad squarefree and positive; closed under products and inverses
class RadicalMonomial {
public:
    RadicalMonomial() : coeff_(1), root_(), rad_(1) {}
    RadicalMonomial(const Rational& c) : coeff_(c), root_(), rad_(1) { normalize(); }
    RadicalMonomial(long c) : RadicalMonomial(Rational(c)) {}
    RadicalMonomial(const Rational& c, const RootOfUnity& z, long rad = 1);

    // q^{k/2}
    static RadicalMonomial q_half_power(long q, long k);

    const Rational& coeff() const { return coeff_; }
    const RootOfUnity& root() const { return root_; }
    long radicand() const { return rad_; }

    RadicalMonomial operator*(const RadicalMonomial& o) const;
    RadicalMonomial operator/(const RadicalMonomial& o) const { return *this * o.inverse(); }
    RadicalMonomial inverse() const;
    RadicalMonomial pow(long e) const;
    bool operator==(const RadicalMonomial& o) const;
    bool operator!=(const RadicalMonomial& o) const { return !(*this == o); }
    bool is_zero() const { return coeff_ == 0; }

    // p-adic valuation, possibly half-integral
    Rational valuation(long p) const;

    Cyclotomic to_cyclotomic() const;
    Complex to_complex() const;
    std::string to_string() const;

private:
    void normalize();
    Rational coeff_;
    RootOfUnity root_;
    long rad_;
};

}  // namespace asai
