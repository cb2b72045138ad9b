#include "asai/cyclotomic.hpp"
#include "asai/error.hpp"
#include "asai/padic.hpp"
#include "asai/ratfunc.hpp"
#include "asai/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace asai;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng, long m) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::vector<long> c(static_cast<std::size_t>(m));
    for (auto& x : c) x = d(rng);
    return Cyclotomic::from_int_powers(m, c);
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(binom(10, 3) == 120);
    CHECK(binom(4, 5) == 0);
    CHECK(binom(4, -1) == 0);
    CHECK(factorial(6) == 720);
    CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(padic_valuation(Rational(50, 3), 5) == 2);
    CHECK(padic_valuation(Rational(50, 3), 3) == -1);
    CHECK(padic_valuation(Integer(0), 7) == kInfiniteValuation);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(euler_phi(25) == 20);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    for (long p : {3L, 5L, 7L, 11L})
        for (long r : {1L, 2L, 3L}) {
            long g = primitive_root_mod_prime_power(p, r), m = ipow(p, r), x = 1, order = 0;
            do {
                x = x * g % m;
                ++order;
            } while (x != 1);
            CHECK(order == euler_phi(m));
        }
}

TEST_CASE("cyclotomic field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (long m : {1L, 3L, 4L, 5L, 8L, 12L, 15L}) {
        for (int t = 0; t < 10; ++t) {
            Cyclotomic a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m), c = random_cyclotomic(rng, m);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
            CHECK(a.conj().conj() == a);
            std::complex<double> z = (a * b).to_complex(), w = a.to_complex() * b.to_complex();
            CHECK(std::abs(z - w) <= 1e-9 * (1 + std::abs(w)));
        }
    }
}

TEST_CASE("roots of unity and lifts") {
    CHECK(Cyclotomic::zeta(12, 3) == Cyclotomic(RootOfUnity::i()));
    CHECK(Cyclotomic::zeta(6).pow(3) == Cyclotomic(-1));
    CHECK(RootOfUnity(12, 4).reduced() == RootOfUnity(3, 1));
    CHECK(Cyclotomic::zeta(5).lift(15).simplify() == Cyclotomic::zeta(5));
    // sum of all primitive 7th roots is -1
    Cyclotomic s;
    for (long k = 1; k < 7; ++k) s += Cyclotomic::zeta(7, k);
    CHECK(s == Cyclotomic(-1));
    CHECK(s.is_rational());
    // Galois orbit of zeta_8 + zeta_8^{-1} = sqrt 2
    Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, -1);
    CHECK(r2 * r2 == Cyclotomic(2));
    CHECK(r2.galois(3) == -r2);
}

TEST_CASE("square roots via Gauss sums") {
    for (long n : {2L, 3L, 5L, 6L, 7L, 12L, 13L}) {
        Cyclotomic r = Cyclotomic::sqrt_int(n);
        CHECK(r * r == Cyclotomic(n));
        CHECK(r.to_complex().real() == doctest::Approx(std::sqrt(static_cast<double>(n))));
    }
    Cyclotomic im = Cyclotomic::sqrt_int(-3);
    CHECK(im * im == Cyclotomic(-3));
    CHECK(im.to_complex().imag() > 0);
}

TEST_CASE("radical monomials") {
    RadicalMonomial a(Rational(3, 2), RootOfUnity(4, 1), 6), b(Rational(-2), RootOfUnity(3, 1), 10);
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == RadicalMonomial(1));
    CHECK(RadicalMonomial::q_half_power(5, 3) == RadicalMonomial(Rational(5), RootOfUnity(), 5));
    CHECK(RadicalMonomial::q_half_power(5, 3).valuation(5) == Rational(3, 2));
    CHECK(RadicalMonomial(Rational(1), RootOfUnity(), 12) == RadicalMonomial(Rational(2), RootOfUnity(), 3));
    Complex z = (a * b).to_cyclotomic().to_complex();
    CHECK(std::abs(z - a.to_complex() * b.to_complex()) < 1e-12);
}

TEST_CASE("p-adic ring operations") {
    auto ctx = PadicContext::make(5, 40);
    PadicElement x = PadicElement::from_rational(ctx, Rational(7, 3));
    CHECK(x * PadicElement(ctx, Integer(3)) == PadicElement(ctx, Integer(7)));
    CHECK(x.is_unit());
    CHECK((x * x.inverse()) == PadicElement(ctx, Integer(1)));
    PadicElement y(ctx, Integer(125));
    CHECK(y.valuation() == 3);
    CHECK(PadicElement(ctx, Integer(0)).valuation() == 40);
    CHECK_THROWS_AS(y.inverse(), Error);
    CHECK(PadicElement::from_digits(ctx, x.to_digits()) == x);
    CHECK(x.truncate(3).value() == x.value() % 125);
}

TEST_CASE("Teichmuller lifts and embeddings") {
    for (long p : {3L, 5L, 7L}) {
        auto ctx = PadicContext::make(p, 30);
        for (long a = 1; a < p; ++a) {
            PadicElement t = teichmuller(ctx, Integer(a));
            CHECK(t.pow(p - 1) == PadicElement(ctx, Integer(1)));
            CHECK(Integer(t.value() % p) == a);
        }
        // embeddings are ring maps on roots of unity of order prime to p
        RootOfUnity z(p - 1, 1), w(p - 1, 2);
        CHECK(embed_padic(z * w, ctx) == embed_padic(z, ctx) * embed_padic(w, ctx));
        CHECK(embed_padic(Cyclotomic(z) + Cyclotomic(w), ctx) == embed_padic(z, ctx) + embed_padic(w, ctx));
    }
    auto ctx = PadicContext::make(5, 20);
    CHECK_THROWS_AS(embed_padic(RootOfUnity(5, 1), ctx), Error);
}

TEST_CASE("unramified extension contexts") {
    auto ctx = PadicContext::make(3, 20, 2);
    CHECK(ctx->q() == 9);
    const PadicElement& g = ctx->teich_generator();
    CHECK(g.pow(8) == PadicElement(ctx, Integer(1)));
    CHECK(g.pow(4) != PadicElement(ctx, Integer(1)));
}

TEST_CASE("Laurent polynomials and rational functions in q^-s") {
    LaurentPoly f = LaurentPoly::one_minus(Cyclotomic(2), 1);
    LaurentPoly g = LaurentPoly::one_minus(Cyclotomic(RootOfUnity::i()), 2);
    CHECK((f * g).coeff(3) == Cyclotomic(2) * Cyclotomic(RootOfUnity::i()));
    CHECK(f.vanishing_order(Cyclotomic(Rational(1, 2))) == 1);
    CHECK(f.divide_linear(Cyclotomic(Rational(1, 2))) * (LaurentPoly::monomial(1, 1) - LaurentPoly(Rational(1, 2))) == f);

    RationalFunctionInQs e = RationalFunctionInQs::euler(Cyclotomic(1), 5);
    CHECK(e.eval(Complex(2, 0)).real() == doctest::Approx(1.0 / (1 - 1.0 / 25)));
    CHECK(e.reflect().reflect().equals(e));
    CHECK(e.shift(1).shift(-1).equals(e));
    CHECK((e * e.inverse()).equals(RationalFunctionInQs::constant(1, 5)));
    CHECK(e.eval_exact(1) == Cyclotomic(Rational(5, 4)));
    try {
        e.eval(Complex(0, 0));
        FAIL("expected a pole");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::pole_at_s);
        CHECK(err.multiplicity() == 1);
    }
}
