#include "asai/characters.hpp"
#include "asai/error.hpp"
#include "asai/poly_weights.hpp"

#include <doctest.h>

using namespace asai;

TEST_CASE("finite-order characters are homomorphisms") {
    for (long p : {3L, 5L, 7L})
        for (long r : {1L, 2L}) {
            long m = ipow(p, r), phi = euler_phi(m);
            FiniteOrderCharacter chi(p, r, RootOfUnity(phi, 1));
            CHECK(chi.conductor() == r);
            for (long a = 1; a < m; ++a) {
                if (a % p == 0) continue;
                for (long b = 1; b < m; b += 3) {
                    if (b % p == 0) continue;
                    CHECK(chi.value(a * b % m) == chi.value(a) * chi.value(b));
                }
                CHECK(chi.value(chi.generator()).pow(chi.dlog(a)) == chi.value(a));
            }
            CHECK((chi * chi.inverse()).is_trivial());
            CHECK(chi.infinity_sign() == (chi.value(m - 1) == RootOfUnity::minus_one() ? -1 : 1));
        }
    // conductor drops when the image has order prime to p
    FiniteOrderCharacter c(5, 3, RootOfUnity(4, 1));
    CHECK(c.conductor() == 1);
    CHECK(FiniteOrderCharacter::trivial(7, 2).conductor() == 0);
    CHECK_THROWS_AS(FiniteOrderCharacter(5, 1, RootOfUnity(4, 1), 1), Error);
}

TEST_CASE("Gauss sums of primitive characters") {
    for (long p : {3L, 5L, 7L})
        for (long r : {1L, 2L}) {
            FiniteOrderCharacter chi(p, r, RootOfUnity(euler_phi(ipow(p, r)), 1));
            long c = chi.conductor();
            Cyclotomic t = chi.gauss_sum(), ti = chi.inverse().gauss_sum();
            CHECK(t * t.conj() == Cyclotomic(ipow(p, c)));
            Cyclotomic sign = chi.infinity_sign() == 1 ? Cyclotomic(1) : Cyclotomic(-1);
            CHECK(t * ti == sign * Cyclotomic(ipow(p, c)));
        }
    // the quadratic character mod 5 has tau = sqrt 5
    FiniteOrderCharacter quad(5, 1, RootOfUnity::minus_one());
    CHECK(quad.gauss_sum() == Cyclotomic::sqrt_int(5));
    CHECK(FiniteOrderCharacter::trivial(5).gauss_sum() == Cyclotomic(1));
}

TEST_CASE("criticality parity") {
    CHECK(criticality_check(1, 4, 2));
    CHECK_FALSE(criticality_check(-1, 4, 2));
    CHECK(criticality_check(-1, 3, 0));
    HeckeCharacterModel phi{FiniteOrderCharacter(5, 1, RootOfUnity::i()), 0};
    CHECK(criticality_check(phi, 2, 1));
}

TEST_CASE("p-adic avatar is multiplicative on units") {
    auto ctx = PadicContext::make(5, 30);
    HeckeCharacterModel phi{FiniteOrderCharacter(5, 2, RootOfUnity(4, 3)), 2};
    for (long a : {2L, 3L, 7L, 11L})
        for (long b : {3L, 13L, 24L})
            CHECK(padic_avatar_eval(phi, a * b, ctx) == padic_avatar_eval(phi, a, ctx) * padic_avatar_eval(phi, b, ctx));
    HeckeCharacterModel triv{FiniteOrderCharacter::trivial(5), 0};
    CHECK(padic_avatar_eval(triv, 7, ctx) == PadicElement(ctx, Integer(1)));
    // wild values have no image in Z_p
    HeckeCharacterModel wild{FiniteOrderCharacter(5, 2, RootOfUnity(20, 1)), 0};
    CHECK_THROWS_AS(padic_avatar_eval(wild, 2, ctx), Error);
}

TEST_CASE("pairing on homogeneous polynomials") {
    for (int n = 0; n <= 6; ++n) {
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b)
                CHECK(pairing_n(HomogeneousPoly::xy(1, b, n - b), dual_element(a, n), n) == Rational(a == b ? 1 : 0));
        // [P, (x + c y)^n] = P(-c, 1)
        HomogeneousPoly P = HomogeneousPoly::xy(Rational(3), n, 0) + HomogeneousPoly::xy(Rational(-2), 0, n);
        Cyclotomic c(Rational(2, 3));
        Cyclotomic expect = Cyclotomic(3) * (-c).pow(n) - Cyclotomic(2);
        CHECK(pairing_with_linear_power(P, c, n) == expect);
        CHECK(pairing_gram_rank(n) == n + 1);
    }
}

TEST_CASE("polynomial algebra") {
    auto x = HomogeneousPoly::var(Var::X), y = HomogeneousPoly::var(Var::Y);
    auto f = (x + y).pow(3);
    CHECK(f.coeff(HomogeneousPoly::Exponents{2, 1, 0, 0, 0, 0, 0, 0}) == 3);
    CHECK(f.pair_degree(Var::X, Var::Y) == 3);
    CHECK(f.derivative(Var::X) == (x + y).pow(2) * Rational(3));
    CHECK(f.rename(Var::Y, Var::Xc).pair_degree(Var::X, Var::Y) == -1);
    CHECK((f - f).is_zero());
}

TEST_CASE("Upsilon at alpha = 0 identifies conjugate variables") {
    auto X = HomogeneousPoly::var(Var::X), Y = HomogeneousPoly::var(Var::Y);
    auto Xc = HomogeneousPoly::var(Var::Xc), Yc = HomogeneousPoly::var(Var::Yc);
    HomogeneousPoly P = X * Yc - Xc * Y * Rational(2);
    CHECK(upsilon(P, 0, 1) == X * Y * Rational(-1));
    // nabla(X Yc) = 1
    CHECK(upsilon(X * Yc, 1, 1) == HomogeneousPoly(1));
    CHECK(upsilon_rank(2) == 9);
}

TEST_CASE("C constants vanish off parity and the checked route is consistent on the even part") {
    for (int n = 0; n <= 4; ++n)
        for (int a = 0; a <= n; ++a)
            for (int i = -n - 1; i <= n + 1; ++i)
                if ((i - a) % 2 != 0) CHECK(c_constant(n, a, i) == 0);
    CComparison c = compare_c_constants(3);
    CHECK(c.compared > 0);
    CHECK(c.sign_relation_holds);
    auto vt = v_polynomials(3);
    for (int j : {-2, 0, 2}) CHECK(vt.reexpand(j) == vt.P.at(j));
}
