#pragma once

#include <stdexcept>
#include <string>

namespace asai {

enum class Errc {
    invalid_input,
    unsupported_order,
    pole_at_s,
    internal_consistency,
    unsupported_case,
    indeterminate_value,
    non_critical,
    not_nearly_ordinary,
    quadrature_failure,
    increase_m,
    not_a_unit,
    insufficient_level,
    pole_at_zero,
    schema,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, int multiplicity = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code), multiplicity_(multiplicity) {}

    Errc code() const { return code_; }
    // order of the pole for pole-at-s, otherwise 0
    int multiplicity() const { return multiplicity_; }

private:
    Errc code_;
    int multiplicity_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg, int mult = 0) {
    throw Error(c, msg, mult);
}

inline void require(bool ok, Errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

}  // namespace asai
