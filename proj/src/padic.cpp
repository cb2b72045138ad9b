#include "asai/padic.hpp"

#include "asai/error.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace asai {

namespace {

// small polynomial arithmetic over F_p, constant term first
using Fp = std::vector<long>;

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& g, long p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    long d = static_cast<long>(g.size()) - 1;
    for (long i = static_cast<long>(r.size()) - 1; i >= d; --i) {
        long c = r[i];
        if (!c) continue;
        for (long j = 0; j <= d; ++j) r[i - d + j] = mod_l(r[i - d + j] - c * g[j], p);
    }
    r.resize(std::min<size_t>(r.size(), d));
    trim(r);
    return r;
}

Fp fp_powmod(Fp a, Integer e, const Fp& g, long p) {
    Fp r{1};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mulmod(r, a, g, p);
        a = fp_mulmod(a, a, g, p);
        e >>= 1;
    }
    return r;
}

Fp fp_sub(Fp a, const Fp& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_l(a[i] - b[i], p);
    trim(a);
    return a;
}

Fp fp_mod(Fp a, const Fp& b, long p) {
    trim(a);
    long db = static_cast<long>(b.size()) - 1;
    long inv = 1;
    while (inv * b.back() % p != 1) ++inv;
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long c = a.back() * inv % p;
        long shift = static_cast<long>(a.size()) - 1 - db;
        for (long j = 0; j <= db; ++j) a[shift + j] = mod_l(a[shift + j] - c * b[j], p);
        trim(a);
    }
    return a;
}

Fp fp_gcd(Fp a, Fp b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

std::vector<long> prime_factors(Integer n) {
    std::vector<long> r;
    for (long d = 2; Integer(d) * d <= n; ++d) {
        if (n % d == 0) {
            r.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r.push_back(n.get_si());
    return r;
}

bool irreducible(const Fp& g, long p, long f) {
    Fp x{0, 1};
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, f);
    if (fp_sub(fp_powmod(x, q, g, p), x, p).size() != 0) return false;
    for (long d : prime_factors(Integer(f))) {
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, f / d);
        Fp h = fp_sub(fp_powmod(x, e, g, p), x, p);
        Fp c = fp_gcd(g, h, p);
        if (c.size() > 1) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const PadicContext> PadicContext::make(long p, long N, long f) {
    require(p > 2 && is_prime(p), Errc::invalid_input, "p must be an odd prime");
    require(N >= 1 && f >= 1, Errc::invalid_input, "precision and residue degree must be positive");
    std::shared_ptr<PadicContext> c(new PadicContext());
    c->p_ = p;
    c->N_ = N;
    c->f_ = f;
    c->init();
    return c;
}

void PadicContext::init() {
    mpz_ui_pow_ui(pN_.get_mpz_t(), p_, N_);
    mpz_ui_pow_ui(q_.get_mpz_t(), p_, f_);
    Fp g;
    if (f_ == 1) {
        g = {0, 1};
    } else {
        // lexicographically first monic irreducible of degree f
        std::vector<long> c(f_, 0);
        for (;;) {
            Fp cand(c.begin(), c.end());
            cand.push_back(1);
            if (cand[0] != 0 && irreducible(cand, p_, f_)) { g = cand; break; }
            long i = 0;
            while (i < f_ && ++c[i] == p_) c[i++] = 0;
            require(i < f_, Errc::internal_consistency, "no irreducible polynomial found");
        }
    }
    g_.assign(g.begin(), g.end());
    // generator of F_q^x
    Integer order = q_ - 1;
    auto primes = prime_factors(order);
    std::vector<long> c(f_, 0);
    c[0] = 1;
    for (;;) {
        long i = 0;
        while (i < f_ && ++c[i] == p_) c[i++] = 0;
        require(i < f_, Errc::internal_consistency, "no generator found");
        Fp a(c.begin(), c.end());
        trim(a);
        if (a.empty()) continue;
        bool ok = true;
        for (long l : primes) {
            Fp e = fp_powmod(a, Integer(order / l), g, p_);
            if (e.size() == 1 && e[0] == 1) { ok = false; break; }
        }
        if (ok) { gen_ = c; break; }
    }
}

const PadicElement& PadicContext::teich_generator() const {
    if (!teich_gen_) {
        // computed once; contexts are shared immutable after make(), so guard the lazy fill
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        if (!teich_gen_) {
            auto self = shared_from_this();
            std::vector<Integer> v(gen_.begin(), gen_.end());
            auto t = std::make_shared<PadicElement>(teichmuller(PadicElement(self, v)));
            const_cast<PadicContext*>(this)->teich_gen_ = t;
        }
    }
    return *teich_gen_;
}

// ---- PadicElement

PadicElement::PadicElement(PadicCtx ctx, const Integer& v) : ctx_(std::move(ctx)), c_(ctx_->f(), 0) {
    c_[0] = v;
    reduce();
}

PadicElement::PadicElement(PadicCtx ctx, std::vector<Integer> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    reduce();
}

PadicElement PadicElement::from_rational(PadicCtx ctx, const Rational& r) {
    Integer den = r.get_den();
    require(den % ctx->p() != 0, Errc::invalid_input, "rational with p in the denominator: " + r.get_str());
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx->modulus_pN().get_mpz_t());
    return PadicElement(ctx, Integer(r.get_num()) * inv);
}

void PadicElement::reduce() {
    long f = ctx_->f();
    const auto& g = ctx_->defining_poly();
    if (static_cast<long>(c_.size()) > f) {
        for (long i = static_cast<long>(c_.size()) - 1; i >= f; --i) {
            if (c_[i] == 0) continue;
            Integer c = c_[i];
            for (long j = 0; j <= f; ++j) c_[i - f + j] -= c * g[j];
        }
    }
    c_.resize(f, 0);
    for (auto& x : c_) {
        x %= ctx_->modulus_pN();
        if (x < 0) x += ctx_->modulus_pN();
    }
}

PadicElement PadicElement::operator+(const PadicElement& o) const {
    std::vector<Integer> v(c_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
    return PadicElement(ctx_, std::move(v));
}

PadicElement PadicElement::operator-(const PadicElement& o) const {
    std::vector<Integer> v(c_);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
    return PadicElement(ctx_, std::move(v));
}

PadicElement PadicElement::operator-() const {
    std::vector<Integer> v(c_);
    for (auto& x : v) x = -x;
    return PadicElement(ctx_, std::move(v));
}

PadicElement PadicElement::operator*(const PadicElement& o) const {
    if (c_.size() == 1) return PadicElement(ctx_, c_[0] * o.c_[0]);
    std::vector<Integer> v(2 * c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return PadicElement(ctx_, std::move(v));
}

PadicElement PadicElement::pow(const Integer& e0) const {
    if (e0 < 0) return inverse().pow(Integer(-e0));
    if (c_.size() == 1) {
        Integer r;
        mpz_powm(r.get_mpz_t(), c_[0].get_mpz_t(), e0.get_mpz_t(), ctx_->modulus_pN().get_mpz_t());
        return PadicElement(ctx_, r);
    }
    PadicElement r(ctx_, Integer(1)), b = *this;
    Integer e = e0;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool PadicElement::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

long PadicElement::valuation() const {
    long v = ctx_->N();
    for (const auto& x : c_)
        if (x != 0) v = std::min(v, padic_valuation(x, ctx_->p()));
    return v;
}

PadicElement PadicElement::inverse() const {
    require(is_unit(), Errc::not_a_unit, "p-adic element is not a unit");
    if (c_.size() == 1) {
        Integer r;
        mpz_invert(r.get_mpz_t(), c_[0].get_mpz_t(), ctx_->modulus_pN().get_mpz_t());
        return PadicElement(ctx_, r);
    }
    // a^{q-2} inverts modulo p, Newton lifts
    PadicElement x = pow(Integer(ctx_->q() - 2));
    PadicElement two(ctx_, Integer(2));
    for (long prec = 1; prec < ctx_->N(); prec *= 2) x = x * (two - *this * x);
    return x;
}

PadicElement PadicElement::truncate(long k) const {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), ctx_->p(), std::min(k, ctx_->N()));
    std::vector<Integer> v(c_);
    for (auto& x : v) x %= m;
    return PadicElement(ctx_, std::move(v));
}

static char digit_char(long d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

static long digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

std::string PadicElement::to_digits() const {
    long p = ctx_->p(), N = ctx_->N();
    require(p <= 36, Errc::invalid_input, "digit serialization needs p <= 36");
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) out += ',';
        std::string s(N, '0');
        Integer x = c_[k];
        for (long i = N - 1; i >= 0; --i) {
            Integer d = x % p;
            s[i] = digit_char(d.get_si());
            x /= p;
        }
        out += s;
    }
    return out;
}

PadicElement PadicElement::from_digits(PadicCtx ctx, const std::string& s) {
    std::vector<Integer> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        Integer x = 0;
        for (char ch : part) {
            long d = digit_value(ch);
            require(d >= 0 && d < ctx->p(), Errc::invalid_input, "bad p-adic digit string: " + s);
            x = x * ctx->p() + d;
        }
        v.push_back(x);
    }
    require(static_cast<long>(v.size()) == ctx->f(), Errc::invalid_input, "digit string has wrong residue degree");
    return PadicElement(ctx, std::move(v));
}

PadicElement teichmuller(const PadicCtx& ctx, const Integer& a) {
    return teichmuller(PadicElement(ctx, a));
}

PadicElement teichmuller(const PadicElement& x0) {
    const auto& ctx = x0.ctx();
    require(!x0.truncate(1).is_zero(), Errc::invalid_input,
            "Teichmuller lift of a residue divisible by p");
    // x -> x^q converges to the lift, one digit per step
    PadicElement x = x0;
    for (long i = 0; i < ctx->N(); ++i) x = x.pow(ctx->q());
    return x;
}

Complex embed_complex(const RootOfUnity& z) { return z.to_complex(); }

PadicElement embed_padic(const RootOfUnity& z0, const PadicCtx& ctx) {
    RootOfUnity z = z0.reduced();
    Integer qm1 = ctx->q() - 1;
    if (z.order() % ctx->p() == 0 || qm1 % z.order() != 0)
        fail(Errc::unsupported_order, "root of unity of order " + std::to_string(z.order()) +
                                          " is not in the unramified extension of degree " + std::to_string(ctx->f()));
    Integer e = qm1 / z.order() * z.exponent();
    return ctx->teich_generator().pow(e);
}

PadicElement embed_padic(const Cyclotomic& x0, const PadicCtx& ctx) {
    if (x0.is_rational()) return PadicElement::from_rational(ctx, x0.to_rational());
    Cyclotomic x = x0;
    Integer qm1 = ctx->q() - 1;
    if (x.order() % ctx->p() == 0 || qm1 % x.order() != 0) x = x.simplify();
    long m = x.order();
    if (m % ctx->p() == 0 || qm1 % m != 0)
        fail(Errc::unsupported_order, "cyclotomic field of conductor " + std::to_string(m) + " not embeddable");
    PadicElement t = embed_padic(RootOfUnity(m, 1), ctx);
    PadicElement acc(ctx, Integer(0)), pw(ctx, Integer(1));
    for (const auto& c : x.coeffs()) {
        if (c != 0) acc += PadicElement::from_rational(ctx, c) * pw;
        pw = pw * t;
    }
    return acc;
}

}  // namespace asai
