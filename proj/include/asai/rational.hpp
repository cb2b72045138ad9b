#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>

namespace asai {

using Integer = mpz_class;
using Rational = mpq_class;

// binomial coefficient, zero outside 0 <= k <= n
Integer binom(long n, long k);
Rational binom_q(long n, long k);
Integer factorial(long n);

Rational rpow(const Rational& x, long e);

constexpr long kInfiniteValuation = LONG_MAX;

long padic_valuation(const Integer& x, long p);
long padic_valuation(const Rational& x, long p);

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

long ipow(long b, long e);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);
long euler_phi(long m);
bool is_prime(long n);
// smallest generator of (Z/p^r)^x for an odd prime p
long primitive_root_mod_prime_power(long p, long r);

}  // namespace asai
