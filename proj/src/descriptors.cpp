#include "asai/descriptors.hpp"

#include "asai/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace asai {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& msg) {
    fail(Errc::schema, (where.empty() ? "/" : where) + ": " + msg);
}

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::schema, what + ": " + e.what());
    }
}

const json& field(const json& o, const std::string& where, const char* key) {
    if (!o.is_object()) schema_error(where, "object expected");
    if (!o.contains(key)) schema_error(where, std::string("missing \"") + key + "\"");
    return o.at(key);
}

long integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) schema_error(where, "integer expected");
    return v.get<long>();
}

Rational rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) schema_error(where, "integer or \"a/b\" string expected");
    Rational r;
    if (r.set_str(v.get<std::string>(), 10) != 0) schema_error(where, "malformed rational");
    if (r.get_den() == 0) schema_error(where, "zero denominator");
    r.canonicalize();
    return r;
}

RootOfUnity root(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) schema_error(where, "[order, exponent] expected");
    long order = integer(v[0], where + "/0");
    if (order < 1) schema_error(where + "/0", "order must be positive");
    return RootOfUnity(order, integer(v[1], where + "/1"));
}

RadicalMonomial monomial(const json& v, const std::string& where) {
    if (!v.is_object()) return RadicalMonomial(rational(v, where));
    Rational c = v.contains("coeff") ? rational(v.at("coeff"), where + "/coeff") : Rational(1);
    RootOfUnity z = v.contains("root") ? root(v.at("root"), where + "/root") : RootOfUnity();
    long rad = v.contains("radicand") ? integer(v.at("radicand"), where + "/radicand") : 1;
    if (rad < 1) schema_error(where + "/radicand", "radicand must be positive");
    return RadicalMonomial(c, z, rad);
}

GL2Component component(const json& v, const std::string& where, long q_w) {
    const json& t = field(v, where, "type");
    if (!t.is_string()) schema_error(where + "/type", "string expected");
    std::string type = t.get<std::string>();
    if (type == "principal")
        return GL2Component::principal(monomial(field(v, where, "alpha"), where + "/alpha"),
                                       monomial(field(v, where, "beta"), where + "/beta"));
    if (type == "special") {
        long eta = integer(field(v, where, "eta"), where + "/eta");
        if (eta != 1 && eta != -1) schema_error(where + "/eta", "must be +1 or -1");
        return GL2Component::special(static_cast<int>(eta), q_w);
    }
    if (type == "ramified_principal") {
        RadicalMonomial nu_value = v.contains("nu_value") ? monomial(v.at("nu_value"), where + "/nu_value")
                                                          : RadicalMonomial(1);
        long nu_id = v.contains("nu_id") ? integer(v.at("nu_id"), where + "/nu_id") : 1;
        long nu_mod = v.contains("nu_mod") ? integer(v.at("nu_mod"), where + "/nu_mod") : 2;
        if (nu_mod < 2) schema_error(where + "/nu_mod", "must be at least 2");
        return GL2Component::ramified_principal(monomial(field(v, where, "mu"), where + "/mu"), nu_id, nu_mod,
                                                nu_value);
    }
    schema_error(where + "/type", "unknown component type '" + type + "'");
}

PlaceDescriptor place(const json& v, const std::string& where) {
    const json& k = field(v, where, "kind");
    if (!k.is_string() || (k != "split" && k != "inert")) schema_error(where + "/kind", "\"split\" or \"inert\" expected");
    long q = integer(field(v, where, "q"), where + "/q");
    if (q < 2 || !is_prime(q)) schema_error(where + "/q", "prime expected");
    const json& cs = field(v, where, "components");
    bool split = k == "split";
    if (!cs.is_array() || cs.size() != (split ? 2u : 1u))
        schema_error(where + "/components", split ? "two components expected" : "one component expected");
    PlaceDescriptor out;
    long q_w = split ? q : q * q;
    try {
        if (split)
            out.data = SatakePlaceData::split(q, component(cs[0], where + "/components/0", q_w),
                                              component(cs[1], where + "/components/1", q_w));
        else
            out.data = SatakePlaceData::inert(q, component(cs[0], where + "/components/0", q_w));
        out.data.validate();
    } catch (const Error& e) {
        if (e.code() == Errc::schema) throw;
        schema_error(where, e.what());
    }
    if (v.contains("phi_at_uniformizer"))
        out.phi_at_uniformizer = monomial(v.at("phi_at_uniformizer"), where + "/phi_at_uniformizer");
    return out;
}

bool boolean(const json& o, const char* key, bool dflt, const std::string& where) {
    if (!o.contains(key)) return dflt;
    if (!o.at(key).is_boolean()) schema_error(where + "/" + key, "boolean expected");
    return o.at(key).get<bool>();
}

}  // namespace

SatakeDescriptor parse_satake(const std::string& text) {
    json j = parse_text(text, "satake descriptor");
    if (!j.is_object()) schema_error("", "object expected");
    SatakeDescriptor d;
    d.at_p = place(field(j, "", "p"), "/p");
    if (j.contains("euler_set")) {
        const json& es = j.at("euler_set");
        if (!es.is_array()) schema_error("/euler_set", "array expected");
        for (std::size_t i = 0; i < es.size(); ++i) d.euler_set.push_back(place(es[i], "/euler_set/" + std::to_string(i)));
    }
    if (j.contains("auxiliary")) d.auxiliary = place(j.at("auxiliary"), "/auxiliary");
    d.conjugate_self_dual = boolean(j, "conjugate_self_dual", false, "");
    d.square_free_conductor = boolean(j, "square_free_conductor", true, "");
    if (j.contains("lambda")) {
        d.lambda = root(j.at("lambda"), "/lambda");
        if (4 % d.lambda.reduced().order() != 0) schema_error("/lambda", "must be a fourth root of unity");
    }
    return d;
}

CharacterDescriptor parse_character(const std::string& text) {
    json j = parse_text(text, "character descriptor");
    if (!j.is_object()) schema_error("", "object expected");
    long p = integer(field(j, "", "p"), "/p");
    if (p < 3 || !is_prime(p)) schema_error("/p", "odd prime expected");
    long r = j.contains("modulus_exponent") ? integer(j.at("modulus_exponent"), "/modulus_exponent") : 1;
    if (r < 1) schema_error("/modulus_exponent", "must be at least 1");
    RootOfUnity g = j.contains("generator_image") ? root(j.at("generator_image"), "/generator_image") : RootOfUnity();
    CharacterDescriptor c;
    try {
        if (j.contains("infinity_sign")) {
            long sgn = integer(j.at("infinity_sign"), "/infinity_sign");
            if (sgn != 1 && sgn != -1) schema_error("/infinity_sign", "must be +1 or -1");
            c.model.finite = FiniteOrderCharacter(p, r, g, static_cast<int>(sgn));
        } else {
            c.model.finite = FiniteOrderCharacter(p, r, g);
        }
    } catch (const Error& e) {
        if (e.code() == Errc::schema) throw;
        schema_error("/generator_image", e.what());
    }
    c.model.w = j.contains("w") ? integer(j.at("w"), "/w") : 0;
    if (j.contains("value_at_p")) {
        if (c.model.finite.conductor() > 0) schema_error("/value_at_p", "only for characters unramified at p");
        c.value_at_p = monomial(j.at("value_at_p"), "/value_at_p");
    }
    return c;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_input, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LocalTwist twist_at(const CharacterDescriptor& chi, const PlaceDescriptor& place) {
    long q = place.data.q;
    const auto& fin = chi.model.finite;
    if (q == fin.p()) {
        LocalTwist t = LocalTwist::from_character(fin);
        if (t.conductor == 0 && chi.value_at_p) t.at_uniformizer = chi.value_at_p->to_cyclotomic();
        return t;
    }
    if (place.phi_at_uniformizer) return LocalTwist::unramified(q, place.phi_at_uniformizer->to_cyclotomic());
    return LocalTwist::unramified(q, Cyclotomic(fin.value(mod_l(q, fin.modulus()))));
}

InterpolationInputs interpolation_inputs(const SatakeDescriptor& s, const CharacterDescriptor& chi, long n,
                                         long alpha) {
    InterpolationInputs in;
    in.p = chi.model.finite.p();
    in.n = n;
    in.alpha = alpha;
    in.parity = chi.infinity_sign();
    in.at_p = s.at_p.data;
    in.twist_at_p = twist_at(chi, s.at_p);
    for (const auto& pl : s.euler_set) in.euler_set.emplace_back(pl.data, twist_at(chi, pl));
    if (s.auxiliary) in.auxiliary = std::make_pair(s.auxiliary->data, twist_at(chi, *s.auxiliary));
    in.conjugate_self_dual = s.conjugate_self_dual;
    in.square_free_conductor = s.square_free_conductor;
    return in;
}

}  // namespace asai
