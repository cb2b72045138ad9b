#pragma once

#include "asai/cyclotomic.hpp"

#include <complex>

namespace asai {

using ComplexLD = std::complex<long double>;

// Gamma on the complex plane (log-gamma based); pole-at-s at non-positive integers
Complex gamma_c(Complex z);
// 1/Gamma, entire
Complex rgamma_c(Complex z);
long double gamma_real(long double x);
long double rgamma_real(long double x);

// pi^{-s/2} Gamma(s/2) and 2 (2 pi)^{-s} Gamma(s)
Complex Gamma_R(Complex s);
Complex Gamma_C(Complex s);
long double Gamma_R(long double s);
long double Gamma_C(long double s);
long double rGamma_R(long double s);
long double rGamma_C(long double s);

// Riemann zeta at real s != 1
double riemann_zeta(double s);

}  // namespace asai
