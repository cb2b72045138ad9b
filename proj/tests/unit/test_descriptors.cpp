#include "asai/descriptors.hpp"
#include "asai/error.hpp"

#include <doctest.h>

#include <string>

using namespace asai;

namespace {

const char* kSplit = R"({
  "p": {"kind": "split", "q": 5,
        "components": [{"type": "principal", "alpha": {"coeff": 5, "radicand": 5}, "beta": {"coeff": "1/25", "radicand": 5}},
                       {"type": "principal", "alpha": {"coeff": 5, "radicand": 5}, "beta": {"coeff": "1/25", "radicand": 5}}]},
  "euler_set": [{"kind": "split", "q": 11, "components": [{"type": "special", "eta": 1}, {"type": "special", "eta": -1}]}],
  "auxiliary": {"kind": "split", "q": 7,
                "components": [{"type": "principal", "alpha": 1, "beta": 1}, {"type": "principal", "alpha": 1, "beta": 1}]},
  "conjugate_self_dual": true
})";

const char* kChar = R"({"p": 5, "modulus_exponent": 1, "generator_image": [4, 1]})";

std::string schema_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        if (e.code() == Errc::schema) return e.what();
        return std::string("wrong code: ") + e.what();
    }
    return "no error";
}

}  // namespace

TEST_CASE("Satake descriptor parsing") {
    SatakeDescriptor s = parse_satake(kSplit);
    CHECK(s.at_p.data.q == 5);
    CHECK(s.at_p.data.kind == PlaceKind::Split);
    CHECK(s.euler_set.size() == 1);
    CHECK(s.euler_set[0].data.w.type == RepType::Special);
    REQUIRE(s.auxiliary);
    CHECK(s.auxiliary->data.q == 7);
    CHECK(s.conjugate_self_dual);
    CHECK(s.square_free_conductor);
    CHECK(s.at_p.data.w.beta == RadicalMonomial(Rational(1, 25), RootOfUnity(), 5));
}

TEST_CASE("character descriptor parsing and local twists") {
    CharacterDescriptor c = parse_character(kChar);
    CHECK(c.model.finite.conductor() == 1);
    CHECK(c.infinity_sign() == -1);
    SatakeDescriptor s = parse_satake(kSplit);
    LocalTwist at_p = twist_at(c, s.at_p);
    CHECK(at_p.conductor == 1);
    // away from p the twist is unramified with value chi(q)
    LocalTwist at7 = twist_at(c, *s.auxiliary);
    CHECK(at7.conductor == 0);
    CHECK(at7.at_uniformizer == Cyclotomic(c.model.finite.value(2)));
    InterpolationInputs in = interpolation_inputs(s, c, 2, 1);
    CHECK(in.parity == -1);
    CHECK(interpolation_rhs(in).ok());
    // alpha = n is excluded for conjugate self-dual data, and parity fails there too
    CHECK_FALSE(interpolation_rhs(interpolation_inputs(s, c, 2, 2)).ok());
}

TEST_CASE("auxiliary factor") {
    SatakeDescriptor s = parse_satake(kSplit);
    CharacterDescriptor c = parse_character(kChar);
    InterpolationRHS rhs = interpolation_rhs(interpolation_inputs(s, c, 2, 1));
    REQUIRE(rhs.auxiliary_factor);
    // chi(7)^2 = -1, omega = 1, n - alpha + 1 = 2
    CHECK(rhs.auxiliary_factor->real() == doctest::Approx(7.0 * (1 + std::pow(7.0, -4))));
}

TEST_CASE("schema errors carry JSON pointers") {
    CHECK(schema_message([] { parse_satake("{}"); }).find("missing \"p\"") != std::string::npos);
    CHECK(schema_message([] { parse_satake("[1"); }).find("satake descriptor") != std::string::npos);
    CHECK(schema_message([] {
              parse_satake(R"({"p": {"kind": "split", "q": 5, "components": [{"type": "special", "eta": 1}]}})");
          }).find("/p/components") != std::string::npos);
    CHECK(schema_message([] {
              parse_satake(R"({"p": {"kind": "inert", "q": 6, "components": []}})");
          }).find("/p/q") != std::string::npos);
    CHECK(schema_message([] {
              parse_satake(R"({"p": {"kind": "inert", "q": 5, "components": [{"type": "cuspidal"}]}})");
          }).find("/p/components/0/type") != std::string::npos);
    CHECK(schema_message([] {
              parse_satake(R"({"p": {"kind": "inert", "q": 5, "components": [{"type": "special", "eta": 2}]}})");
          }).find("/p/components/0/eta") != std::string::npos);
    CHECK(schema_message([] {
              parse_satake(R"({"p": {"kind": "inert", "q": 5, "components": [{"type": "principal", "alpha": "1/0", "beta": 1}]}})");
          }).find("/p/components/0/alpha") != std::string::npos);
    CHECK(schema_message([] { parse_character(R"({"p": 2})"); }).find("/p") != std::string::npos);
    CHECK(schema_message([] { parse_character(R"({"p": 5, "generator_image": [0, 1]})"); })
              .find("/generator_image/0") != std::string::npos);
    CHECK(schema_message([] { parse_character(R"({"p": 5, "generator_image": [4, 1], "value_at_p": 2})"); })
              .find("/value_at_p") != std::string::npos);
}
