#include "asai/error.hpp"
#include "asai/schwartz.hpp"

#include <doctest.h>

#include <cmath>

using namespace asai;

namespace {

long transform_mismatches(const SchwartzClass& phi, long inv, long sup, long den, long step) {
    SchwartzClass hat = fourier_transform(phi);
    long p = phi.p, bad = 0;
    Rational d = rpow(Rational(p), -den);
    long span = ipow(p, den + 1);
    for (long i = 0; i < span; i += step)
        for (long j = 0; j < span; j += step + 1) {
            Rational x = d * Rational(i) - Rational(p), y = d * Rational(j) - Rational(1);
            if (!(hat.eval(x, y) - finite_fourier_oracle(phi, inv, sup, x, y)).is_zero()) ++bad;
        }
    return bad;
}

}  // namespace

TEST_CASE("exact zero test for sums of p-power roots of unity") {
    CHECK(ppower_counts_vanish({1, 1, 1, 1, 1}, 5, 1));
    CHECK_FALSE(ppower_counts_vanish({1, 0, 0, 0, 0}, 5, 1));
    CHECK(ppower_counts_vanish({0, 0, 0, 0, 0}, 5, 1));
    // constant on cosets of the order-p subgroup of mu_{p^2}
    std::vector<long> c(9, 0);
    for (long k = 1; k < 9; k += 3) c[static_cast<std::size_t>(k)] = 2;
    CHECK(ppower_counts_vanish(c, 3, 2));
}

TEST_CASE("closed-form transforms agree with finite Fourier sums") {
    CHECK(transform_mismatches(SchwartzClass::ordinary(3), 2, 1, 1, 2) == 0);
    CHECK(transform_mismatches(SchwartzClass::padic(3, 2), 3, 1, 2, 5) == 0);
    CHECK(transform_mismatches(SchwartzClass::auxiliary(5), 2, 1, 1, 7) == 0);
    CHECK(transform_mismatches(SchwartzClass::tame(FiniteOrderCharacter(5, 1, RootOfUnity(2, 1))), 3, 1, 2, 29) == 0);
}

TEST_CASE("the symplectic transform is an involution") {
    for (const SchwartzClass& phi : {SchwartzClass::ordinary(5), SchwartzClass::padic(3, 2), SchwartzClass::auxiliary(3),
                                     SchwartzClass::tame(FiniteOrderCharacter(3, 2, RootOfUnity(6, 1)))}) {
        SchwartzClass twice = fourier_transform(fourier_transform(phi));
        for (long i = -6; i <= 6; ++i)
            for (long j = -4; j <= 4; ++j) {
                Rational x(i, phi.p * phi.p), y(j, phi.p);
                CHECK(twice.eval(x, y) == phi.eval(x, y));
            }
    }
}

TEST_CASE("auxiliary transform value at the origin") {
    SchwartzClass hat = fourier_transform(SchwartzClass::auxiliary(7));
    CHECK(hat.eval(Rational(0), Rational(0)) == Cyclotomic(Rational(6, 7)));
}

TEST_CASE("archimedean transform: closed form against a trapezoid sum") {
    for (long k : {0L, 1L, 2L, 3L}) {
        SchwartzClass phi = SchwartzClass::archimedean(k);
        SchwartzClass hat = fourier_transform(phi);
        CHECK(hat.arch_sign == (k % 2 == 0 ? phi.arch_sign : -phi.arch_sign));
        for (auto [x, y] : {std::pair{0.3, -0.2}, std::pair{1.1, 0.4}, std::pair{-0.7, 0.9}}) {
            Complex a = hat.eval_arch(x, y), b = arch_fourier_numeric(phi, x, y);
            CHECK(std::abs(a - b) < 1e-10);
        }
    }
}

TEST_CASE("unit average and section distribution identities, small levels") {
    for (long p : {3L, 5L}) {
        IdentityReport ua = unit_average(p, 1, 2);
        CHECK(ua.points > 0);
        CHECK(ua.holds());
        IdentityReport ds = section_distribution_check(p, 1, 3);
        CHECK(ds.holds());
    }
    CHECK(unit_average(3, 2, 3).holds());
    CHECK(section_distribution_check(3, 2, 4).holds());
}

TEST_CASE("constant term near s = 0") {
    ConstantTermConfig c;
    c.aux_prime = 2;
    ConstantTerm at0 = constant_term_at_zero(c), near = constant_term(c, 1e-6);
    CHECK(std::abs(at0.first) == doctest::Approx(0.0));
    CHECK(std::abs(near.second - at0.second) <= 1e-6 * std::abs(at0.second));
    try {
        constant_term_at_zero(ConstantTermConfig{});
        FAIL("expected pole-at-zero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::pole_at_zero);
    }
}
