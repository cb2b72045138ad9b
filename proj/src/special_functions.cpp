#include "asai/special_functions.hpp"

#include "asai/error.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <numbers>

namespace asai {

namespace {

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

struct GslQuiet {
    gsl_error_handler_t* old;
    GslQuiet() : old(gsl_set_error_handler_off()) {}
    ~GslQuiet() { gsl_set_error_handler(old); }
};

}  // namespace

Complex gamma_c(Complex z) {
    if (is_nonpositive_integer(z)) fail(Errc::pole_at_s, "Gamma has a pole at " + std::to_string(z.real()), 1);
    if (z.imag() == 0) return static_cast<double>(gamma_real(z.real()));
    GslQuiet quiet;
    gsl_sf_result lnr, arg;
    int st = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    if (st != GSL_SUCCESS) fail(Errc::invalid_input, "complex log-gamma failed");
    return std::polar(std::exp(lnr.val), arg.val);
}

Complex rgamma_c(Complex z) {
    if (is_nonpositive_integer(z)) return 0;
    return 1.0 / gamma_c(z);
}

long double gamma_real(long double x) {
    if (x <= 0 && std::floor(x) == x) fail(Errc::pole_at_s, "Gamma has a pole at " + std::to_string(static_cast<double>(x)), 1);
    return std::tgamma(x);
}

long double rgamma_real(long double x) {
    if (x <= 0 && std::floor(x) == x) return 0;
    return 1 / std::tgamma(x);
}

Complex Gamma_R(Complex s) { return std::pow(std::numbers::pi, -s / 2.0) * gamma_c(s / 2.0); }

Complex Gamma_C(Complex s) { return 2.0 * std::pow(2 * std::numbers::pi, -s) * gamma_c(s); }

long double Gamma_R(long double s) {
    return std::pow(std::numbers::pi_v<long double>, -s / 2) * gamma_real(s / 2);
}

long double Gamma_C(long double s) {
    return 2 * std::pow(2 * std::numbers::pi_v<long double>, -s) * gamma_real(s);
}

long double rGamma_R(long double s) {
    return std::pow(std::numbers::pi_v<long double>, s / 2) * rgamma_real(s / 2);
}

long double rGamma_C(long double s) {
    return std::pow(2 * std::numbers::pi_v<long double>, s) / 2 * rgamma_real(s);
}

double riemann_zeta(double s) {
    require(s != 1, Errc::pole_at_s, "zeta has a pole at 1");
    GslQuiet quiet;
    gsl_sf_result r;
    if (gsl_sf_zeta_e(s, &r) != GSL_SUCCESS) fail(Errc::invalid_input, "zeta evaluation failed");
    return r.val;
}

}  // namespace asai
