#include "asai/error.hpp"
#include "asai/iwasawa_measure.hpp"

#include <doctest.h>

using namespace asai;

namespace {

PadicElement one(const PadicCtx& ctx) { return PadicElement(ctx, Integer(1)); }

FiniteLevelMeasure sample(const PadicCtx& ctx, long r, std::uint64_t seed) {
    return synth_distribution(seed, r, ctx->p(), ctx->N()).top();
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::internal_consistency;
}

}  // namespace

TEST_CASE("ray class levels") {
    for (long p : {3L, 5L, 7L})
        for (long r : {1L, 2L, 3L}) {
            RayClassLevel L(p, r);
            CHECK(L.order() == euler_phi(ipow(p, r)));
            for (long u : L.elements()) {
                CHECK(L.mul(u, L.inverse(u)) == 1);
                auto fib = L.fiber(u);
                CHECK(static_cast<long>(fib.size()) == p);
                RayClassLevel up(p, r + 1);
                for (long v : fib) CHECK(up.project(v) == u);
            }
            CHECK_FALSE(L.contains(p));
        }
}

TEST_CASE("group ring arithmetic") {
    auto ctx = PadicContext::make(5, 20);
    long r = 2;
    CHECK(FiniteLevelMeasure::delta(ctx, r, 2) * FiniteLevelMeasure::delta(ctx, r, 13) ==
          FiniteLevelMeasure::delta(ctx, r, 1));
    FiniteLevelMeasure a = sample(ctx, r, 1), b = sample(ctx, r, 2), c = sample(ctx, r, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).total_mass() == a.total_mass() * b.total_mass());
    CHECK((a * b).pushforward() == a.pushforward() * b.pushforward());
    CHECK((a - a).is_zero());
    CHECK(a * FiniteLevelMeasure::delta(ctx, r, 1) == a);
}

TEST_CASE("distribution property") {
    auto mu = synth_distribution(42, 3, 5, 30);
    CHECK(mu.depth() == 3);
    DistributionReport rep = distribution_check(mu);
    CHECK(rep.holds);
    CHECK(rep.fibers_checked == 4 + 20);
    mu.levels[0][1] += one(mu.ctx);
    DistributionReport bad = distribution_check(mu);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.first_failure.empty());
}

TEST_CASE("evaluation at characters") {
    auto ctx = PadicContext::make(5, 30);
    AvatarCharacter chi{{FiniteOrderCharacter(5, 2, RootOfUnity(4, 1)), 1}, Orientation::Arithmetic};
    RayClassLevel L(5, 2);
    for (long x : {1L, 2L, 7L, 24L})
        CHECK(evaluate_at_character(FiniteLevelMeasure::delta(ctx, 2, x), chi) == chi.eval(x, L, ctx));
    // finite-order values do not depend on the level once it reaches the conductor
    auto mu = synth_distribution(9, 3, 5, 30);
    AvatarCharacter fin{{FiniteOrderCharacter(5, 2, RootOfUnity(4, 1)), 0}, Orientation::Arithmetic};
    CHECK(evaluate_at_character(mu, fin, 1) == evaluate_at_character(mu, fin, 3));
    // with w != 0 the representative power is compatible only modulo p^level
    CHECK((evaluate_at_character(mu, chi, 2) - evaluate_at_character(mu, chi, 3)).valuation() >= 2);
    AvatarCharacter wild{{FiniteOrderCharacter(5, 2, RootOfUnity(20, 1)), 0}, Orientation::Arithmetic};
    CHECK(code_of([&] { evaluate_at_character(mu, wild, 1); }) == Errc::insufficient_level);
    CHECK(code_of([&] { evaluate_at_character(mu, wild, 2); }) == Errc::unsupported_order);
}

TEST_CASE("cyclotomic twist") {
    auto ctx = PadicContext::make(5, 30);
    FiniteLevelMeasure mu = sample(ctx, 2, 5);
    CHECK(tw_p(tw_p(mu, 3), -3) == mu);
    CHECK(tw_p(tw_p(mu, 2, Orientation::Geometric), -2, Orientation::Geometric) == mu);
    // the two orientations agree modulo p^r only: representatives multiply to 1 mod p^r
    FiniteLevelMeasure mixed = tw_p(tw_p(mu, 1, Orientation::Geometric), 1) - mu;
    for (const auto& [x, c] : mixed.coefficients()) CHECK(c.valuation() >= 2);
    // twisting by k moves the weight of the evaluating character
    AvatarCharacter triv{{FiniteOrderCharacter::trivial(5, 2), 0}, Orientation::Arithmetic};
    AvatarCharacter weight2{{FiniteOrderCharacter::trivial(5, 2), 2}, Orientation::Arithmetic};
    CHECK(evaluate_at_character(tw_p(mu, 2), triv) == evaluate_at_character(mu, weight2));
    auto proj = tw_p(synth_distribution(3, 3, 5, 30), 1);
    CHECK(distribution_check(proj).holds);
}

TEST_CASE("normalization of partial zeta elements") {
    auto ctx = PadicContext::make(5, 30);
    auto raw = synth_distribution(11, 3, 5, 30);
    // n = alpha, unit omega and lambda = 1: nothing changes and the distribution property survives
    auto same = normalize_partial_zeta(raw, one(ctx), 2, 2, one(ctx));
    for (long r = 1; r <= 3; ++r) CHECK(same.at(r) == raw.at(r));
    CHECK(distribution_check(same).holds);
    PadicElement c = normalization_constant(ctx, 2, 3, 1, one(ctx));
    CHECK(c.valuation() == 8);
    PadicElement five(ctx, Integer(5));
    CHECK(code_of([&] { normalize_partial_zeta(raw, five, 2, 2, one(ctx)); }) == Errc::not_nearly_ordinary);
}

TEST_CASE("Teichmuller idempotents") {
    auto ctx = PadicContext::make(7, 20);
    long r = 2;
    FiniteLevelMeasure sum(ctx, r);
    for (long j = 0; j < 6; ++j) {
        FiniteLevelMeasure e = teichmuller_idempotent(ctx, r, j);
        CHECK(e * e == e);
        for (long k = j + 1; k < 6; ++k) CHECK((e * teichmuller_idempotent(ctx, r, k)).is_zero());
        sum = sum + e;
    }
    CHECK(sum == FiniteLevelMeasure::delta(ctx, r, 1));
}

TEST_CASE("auxiliary element inverses") {
    auto ctx = PadicContext::make(5, 30);
    for (long r : {1L, 2L}) {
        CHECK(code_of([&] { p_v0_inverse(ctx, r, 7); }) == Errc::not_a_unit);
        PV0Inverse inv = p_v0_inverse_restricted(ctx, r, 7);
        CHECK_FALSE(inv.full);
        CHECK(!inv.dropped_components.empty());
        CHECK(inv.P * inv.P_inverse == inv.idempotent);
        CHECK(inv.idempotent * inv.idempotent == inv.idempotent);
        // sigma = 1 makes every component a unit
        PV0Inverse full = p_v0_inverse(ctx, r, 7, 1);
        CHECK(full.full);
        CHECK(full.P * full.P_inverse == FiniteLevelMeasure::delta(ctx, r, 1));
    }
    CHECK(code_of([&] { p_v0_inverse(ctx, 1, 11); }) == Errc::not_a_unit);
}

TEST_CASE("assembled p-adic L-function against the direct sum") {
    auto ctx = PadicContext::make(5, 30);
    auto partial = synth_distribution(17, 3, 5, 30);
    LpConstants c;
    c.c_infinity = PadicElement(ctx, Integer(3));
    c.lambda_EF = PadicElement(ctx, Integer(2));
    c.xi2 = 2;
    c.n = 2;
    c.alpha = 1;
    LpResult lp = build_Lp(partial, c);
    CHECK(lp.tw_exponent == 3);
    CHECK(distribution_check(lp.measure).holds);
    for (long gen : {1L, 3L}) {
        AvatarCharacter chi{{FiniteOrderCharacter(5, 2, RootOfUnity(4, gen)), 0}, Orientation::Arithmetic};
        CHECK(evaluate_at_character(lp.measure, chi) == build_Lp_direct_value(partial, c, chi));
    }
    c.omega_trivial = true;
    c.q_v0 = 7;
    LpResult lp2 = build_Lp(partial, c);
    CHECK(lp2.restricted_inverse);
    MaminReport m = mamin_compare(lp.measure, 1, lp.measure, 1);
    CHECK(m.differing_coefficients == 0);
}

TEST_CASE("measure JSON round trip and schema errors") {
    auto mu = synth_distribution(5, 2, 3, 25);
    ProjectiveMeasure back = measure_from_json(measure_to_json(mu));
    REQUIRE(back.depth() == 2);
    CHECK(back.at(1) == mu.at(1));
    CHECK(back.at(2) == mu.at(2));
    CHECK(code_of([] { measure_from_json(R"({"p": 3, "levels": []})"); }) == Errc::schema);
    CHECK(code_of([] { measure_from_json("not json"); }) == Errc::schema);
    try {
        measure_from_json(R"({"p": 3, "N": 10, "levels": [{"r": 1, "coefficients": {"3": "0"}}]})");
        FAIL("expected a schema error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::schema);
        CHECK(std::string(e.what()).find("/levels/0") != std::string::npos);
    }
}
