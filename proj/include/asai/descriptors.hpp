#pragma once

#include "asai/characters.hpp"
#include "asai/iwasawa_measure.hpp"
#include "asai/local_factors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asai {

// Satake descriptor:
// { "p": <place>, "euler_set": [<place>...], "auxiliary": <place>, "conjugate_self_dual": bool,
//   "square_free_conductor": bool, "lambda": [order, exponent] }
// place: { "kind": "split" | "inert", "q": prime, "components": [<component>...], "phi_at_uniformizer": <monomial> }
// component: { "type": "principal", "alpha": <monomial>, "beta": <monomial> } | { "type": "special", "eta": +-1 }
//          | { "type": "ramified_principal", "mu": <monomial>, "nu_id": int, "nu_mod": int, "nu_value": <monomial> }
// monomial: integer | "a/b" | { "coeff": "a/b", "root": [order, exponent], "radicand": int }
struct PlaceDescriptor {
    SatakePlaceData data;
    std::optional<RadicalMonomial> phi_at_uniformizer;
};
struct SatakeDescriptor {
    PlaceDescriptor at_p;
    std::vector<PlaceDescriptor> euler_set;
    std::optional<PlaceDescriptor> auxiliary;
    bool conjugate_self_dual = false;
    bool square_free_conductor = true;
    RootOfUnity lambda;
};

// Character descriptor:
// { "p": prime, "modulus_exponent": r, "generator_image": [order, exponent], "infinity_sign": +-1, "w": int,
//   "value_at_p": <monomial> }
struct CharacterDescriptor {
    HeckeCharacterModel model;
    std::optional<RadicalMonomial> value_at_p;  // unramified phi only
    int infinity_sign() const { return model.finite.infinity_sign(); }
};

SatakeDescriptor parse_satake(const std::string& json_text);
CharacterDescriptor parse_character(const std::string& json_text);
std::string read_text_file(const std::string& path);

// local twist of phi at a place: the character's own data at p, the place override or chi(q) elsewhere
LocalTwist twist_at(const CharacterDescriptor& chi, const PlaceDescriptor& place);
InterpolationInputs interpolation_inputs(const SatakeDescriptor& s, const CharacterDescriptor& chi, long n,
                                         long alpha);

}  // namespace asai
