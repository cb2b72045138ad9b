#pragma once

#include "asai/cyclotomic.hpp"
#include "asai/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace asai {

class PadicElement;

// Z_p[x]/(g) modulo p^N, g a monic lift of an irreducible of degree f over F_p.
class PadicContext : public std::enable_shared_from_this<PadicContext> {
public:
    static std::shared_ptr<const PadicContext> make(long p, long N = 40, long f = 1);

    long p() const { return p_; }
    long f() const { return f_; }
    long N() const { return N_; }
    const Integer& modulus_pN() const { return pN_; }
    // residue field cardinality p^f
    const Integer& q() const { return q_; }
    const std::vector<Integer>& defining_poly() const { return g_; }

    // Teichmuller lift of the fixed generator of F_q^x; i_p sends exp(2 pi i/(q-1)) here
    const PadicElement& teich_generator() const;
    // the generator modulo p as coefficient list
    const std::vector<long>& generator_residue() const { return gen_; }

private:
    PadicContext() = default;
    void init();
    long p_ = 0, f_ = 1, N_ = 0;
    Integer pN_, q_;
    std::vector<Integer> g_;
    std::vector<long> gen_;
    std::shared_ptr<PadicElement> teich_gen_;
};

using PadicCtx = std::shared_ptr<const PadicContext>;

class PadicElement {
public:
    PadicElement() = default;
    PadicElement(PadicCtx ctx, const Integer& v);
    PadicElement(PadicCtx ctx, std::vector<Integer> coeffs);
    static PadicElement from_rational(PadicCtx ctx, const Rational& r);

    const PadicCtx& ctx() const { return ctx_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    // for f = 1, the residue in [0, p^N)
    const Integer& value() const { return c_[0]; }

    PadicElement operator+(const PadicElement& o) const;
    PadicElement operator-(const PadicElement& o) const;
    PadicElement operator-() const;
    PadicElement operator*(const PadicElement& o) const;
    PadicElement operator/(const PadicElement& o) const { return *this * o.inverse(); }
    PadicElement& operator+=(const PadicElement& o) { return *this = *this + o; }
    PadicElement& operator-=(const PadicElement& o) { return *this = *this - o; }
    PadicElement& operator*=(const PadicElement& o) { return *this = *this * o; }
    bool operator==(const PadicElement& o) const { return c_ == o.c_; }
    bool operator!=(const PadicElement& o) const { return c_ != o.c_; }

    PadicElement pow(const Integer& e) const;
    PadicElement pow(long e) const { return pow(Integer(e)); }
    // requires a unit
    PadicElement inverse() const;
    bool is_zero() const;
    bool is_unit() const { return valuation() == 0; }
    // N when zero at working precision
    long valuation() const;
    // reduction modulo p^k (k <= N) as an element of the same context
    PadicElement truncate(long k) const;

    // base-p digits, most significant first, N per coefficient, coefficients joined by ','
    std::string to_digits() const;
    static PadicElement from_digits(PadicCtx ctx, const std::string& s);

private:
    PadicCtx ctx_;
    std::vector<Integer> c_;
    void reduce();
};

PadicElement teichmuller(const PadicCtx& ctx, const Integer& a);
PadicElement teichmuller(const PadicElement& x);

// fixed embeddings of a root of unity; orders with a nontrivial p-part are rejected
Complex embed_complex(const RootOfUnity& z);
PadicElement embed_padic(const RootOfUnity& z, const PadicCtx& ctx);
// image of a cyclotomic number with p-integral coefficients in an order prime to p
PadicElement embed_padic(const Cyclotomic& x, const PadicCtx& ctx);

}  // namespace asai
