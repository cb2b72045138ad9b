#include "asai/rational.hpp"

#include "asai/error.hpp"

#include <numeric>
#include <vector>

namespace asai {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_input: return "invalid-input";
        case Errc::unsupported_order: return "unsupported-order";
        case Errc::pole_at_s: return "pole-at-s";
        case Errc::internal_consistency: return "internal-consistency";
        case Errc::unsupported_case: return "unsupported-case";
        case Errc::indeterminate_value: return "indeterminate-value";
        case Errc::non_critical: return "non-critical";
        case Errc::not_nearly_ordinary: return "not-nearly-ordinary";
        case Errc::quadrature_failure: return "quadrature-failure";
        case Errc::increase_m: return "increase-M";
        case Errc::not_a_unit: return "not-a-unit";
        case Errc::insufficient_level: return "insufficient-level";
        case Errc::pole_at_zero: return "pole-at-zero";
        case Errc::schema: return "schema";
    }
    return "error";
}

Integer binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binom_q(long n, long k) { return Rational(binom(n, k)); }

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational rpow(const Rational& x, long e) {
    if (e < 0) {
        require(x != 0, Errc::invalid_input, "zero to a negative power");
        Rational inv = 1 / x;
        return rpow(inv, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

long padic_valuation(const Integer& x, long p) {
    if (x == 0) return kInfiniteValuation;
    Integer pp = p;
    return static_cast<long>(mpz_remove(Integer().get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

long padic_valuation(const Rational& x, long p) {
    if (x == 0) return kInfiniteValuation;
    return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    try {
        r.set_str(s, 10);
    } catch (const std::invalid_argument&) {
        fail(Errc::invalid_input, "not a rational: " + s);
    }
    r.canonicalize();
    return r;
}

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }
long mod_l(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long euler_phi(long m) {
    long r = m;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            while (m % d == 0) m /= d;
            r -= r / d;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static long powmod(long b, long e, long m) {
    __int128 r = 1, x = mod_l(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<long>(r);
}

long primitive_root_mod_prime_power(long p, long r) {
    require(p > 2 && is_prime(p) && r >= 1, Errc::invalid_input, "odd prime power expected");
    long M = ipow(p, r);
    long order = M / p * (p - 1);
    std::vector<long> primes;
    long t = order;
    for (long d = 2; d * d <= t; ++d) {
        if (t % d == 0) {
            primes.push_back(d);
            while (t % d == 0) t /= d;
        }
    }
    if (t > 1) primes.push_back(t);
    for (long g = 2; g < M; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (long q : primes)
            if (powmod(g, order / q, M) == 1) { ok = false; break; }
        if (ok) return g;
    }
    fail(Errc::internal_consistency, "no primitive root");
}

}  // namespace asai
