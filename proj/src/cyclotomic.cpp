#include "asai/cyclotomic.hpp"

#include "asai/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace asai {

// ---- RootOfUnity

RootOfUnity::RootOfUnity(long order, long exponent) : order_(order), exponent_(0) {
    require(order >= 1, Errc::invalid_input, "root of unity order must be positive");
    exponent_ = mod_l(exponent, order);
}

RootOfUnity RootOfUnity::reduced() const {
    long g = gcd_l(exponent_, order_);
    if (exponent_ == 0) return RootOfUnity(1, 0);
    return RootOfUnity(order_ / g, exponent_ / g);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    long L = lcm_l(order_, o.order_);
    return RootOfUnity(L, exponent_ * (L / order_) + o.exponent_ * (L / o.order_)).reduced();
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
    RootOfUnity a = reduced(), b = o.reduced();
    return a.order_ == b.order_ && a.exponent_ == b.exponent_;
}

Complex RootOfUnity::to_complex() const {
    long double t = 2.0L * std::numbers::pi_v<long double> * exponent_ / order_;
    return Complex(static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t)));
}

// ---- cyclotomic polynomials

const std::vector<Integer>& cyclotomic_polynomial(long m) {
    static std::recursive_mutex mu;
    static std::map<long, std::vector<Integer>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by Phi_d for proper divisors d
    std::vector<Integer> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        const std::vector<Integer>& den = cyclotomic_polynomial(d);
        long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
        std::vector<Integer> q(dn - dd + 1, 0);
        for (long i = dn; i >= dd; --i) {
            Integer c = num[i];
            q[i - dd] = c;
            if (c != 0)
                for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = q;
    }
    return cache.emplace(m, num).first->second;
}

static void reduce_mod_phi(std::vector<Rational>& a, long m) {
    const auto& phi = cyclotomic_polynomial(m);
    long deg = static_cast<long>(phi.size()) - 1;
    for (long i = static_cast<long>(a.size()) - 1; i >= deg; --i) {
        if (a[i] == 0) continue;
        Rational c = a[i];
        for (long j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
    }
    a.resize(deg, Rational(0));
}

// ---- Cyclotomic

Cyclotomic::Cyclotomic(const RootOfUnity& z0) {
    RootOfUnity z = z0.reduced();
    std::vector<Rational> v(z.exponent() + 1, Rational(0));
    v[z.exponent()] = 1;
    *this = from_powers(z.order(), v);
}

Cyclotomic Cyclotomic::from_powers(long m, const std::vector<Rational>& coeffs) {
    require(m >= 1, Errc::invalid_input, "cyclotomic order must be positive");
    std::vector<Rational> a(coeffs.size(), Rational(0));
    // fold exponents mod m first
    if (static_cast<long>(a.size()) > m) a.assign(m, Rational(0));
    for (size_t k = 0; k < coeffs.size(); ++k) a[k % m] += coeffs[k];
    if (static_cast<long>(a.size()) < euler_phi(m)) a.resize(euler_phi(m), Rational(0));
    reduce_mod_phi(a, m);
    return Cyclotomic(m, std::move(a));
}

Cyclotomic Cyclotomic::from_int_powers(long m, const std::vector<long>& coeffs) {
    // fold and reduce over the integers first
    std::vector<Integer> a(std::max<long>(m, 1), 0);
    for (size_t k = 0; k < coeffs.size(); ++k) a[k % m] += coeffs[k];
    const auto& phi = cyclotomic_polynomial(m);
    long deg = static_cast<long>(phi.size()) - 1;
    for (long i = static_cast<long>(a.size()) - 1; i >= deg; --i) {
        if (a[i] == 0) continue;
        Integer c = a[i];
        for (long j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
    }
    std::vector<Rational> r(deg);
    for (long i = 0; i < deg; ++i) r[i] = Rational(a[i]);
    return Cyclotomic(m, std::move(r));
}

static long legendre(long a, long p) {
    a = mod_l(a, p);
    if (a == 0) return 0;
    long r = 1, x = a, e = (p - 1) / 2;
    __int128 acc = 1, b = x;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    r = static_cast<long>(acc);
    return r == 1 ? 1 : -1;
}

static Cyclotomic sqrt_prime(long p) {
    if (p == 2) return Cyclotomic::zeta(8, 1) - Cyclotomic::zeta(8, 3);
    std::vector<long> c(p, 0);
    for (long a = 1; a < p; ++a) c[a] = legendre(a, p);
    Cyclotomic g = Cyclotomic::from_int_powers(p, c);
    if (p % 4 == 1) return g;
    // g = i sqrt(p)
    return -(Cyclotomic(RootOfUnity::i()) * g);
}

Cyclotomic Cyclotomic::sqrt_int(long n) {
    require(n != 0, Errc::invalid_input, "sqrt of zero requested as unit");
    Cyclotomic r(1);
    if (n < 0) r = Cyclotomic(RootOfUnity::i());
    long a = n < 0 ? -n : n;
    long outside = 1;
    for (long d = 2; d * d <= a; ++d) {
        long e = 0;
        while (a % d == 0) { a /= d; ++e; }
        outside *= ipow(d, e / 2);
        if (e % 2) r = r * sqrt_prime(d);
    }
    if (a > 1) r = r * sqrt_prime(a);
    return r * Cyclotomic(outside);
}

Cyclotomic Cyclotomic::lift(long L) const {
    if (L == m_) return *this;
    require(L % m_ == 0, Errc::invalid_input, "lift target must be a multiple of the order");
    long step = L / m_;
    std::vector<Rational> v(step * (c_.size() ? c_.size() - 1 : 0) + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) v[k * step] = c_[k];
    return from_powers(L, v);
}

Cyclotomic Cyclotomic::simplify() const {
    if (is_rational()) return Cyclotomic(c_[0]);
    // elements of Q(zeta_d) are fixed by z -> z^a for a = 1 mod d; find the smallest such d
    for (long d = 1; d < m_; ++d) {
        if (m_ % d) continue;
        bool fixed = true;
        for (long a = 1; a < m_ && fixed; a += d)
            if (gcd_l(a, m_) == 1 && a != 1 && galois(a) != *this) fixed = false;
        if (!fixed) continue;
        // solve for coordinates in Q(zeta_d): trace-free approach via linear elimination
        long pd = euler_phi(d), pm = euler_phi(m_);
        std::vector<std::vector<Rational>> A(pm, std::vector<Rational>(pd + 1, Rational(0)));
        for (long j = 0; j < pd; ++j) {
            Cyclotomic b = Cyclotomic::zeta(d, j).lift(m_);
            for (long i = 0; i < pm; ++i) A[i][j] = b.c_[i];
        }
        for (long i = 0; i < pm; ++i) A[i][pd] = c_[i];
        std::vector<Rational> x(pd, Rational(0));
        long row = 0;
        std::vector<long> pivcol;
        for (long col = 0; col < pd && row < pm; ++col) {
            long piv = -1;
            for (long i = row; i < pm; ++i)
                if (A[i][col] != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(A[piv], A[row]);
            for (long i = 0; i < pm; ++i) {
                if (i == row || A[i][col] == 0) continue;
                Rational f = A[i][col] / A[row][col];
                for (long k = col; k <= pd; ++k) A[i][k] -= f * A[row][k];
            }
            pivcol.push_back(col);
            ++row;
        }
        for (size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = A[r][pd] / A[r][pivcol[r]];
        return Cyclotomic(d, x);
    }
    return *this;
}

static long common_order(long a, long b) { return lcm_l(a, b); }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (m_ != o.m_) {
        long L = common_order(m_, o.m_);
        return lift(L) + o.lift(L);
    }
    std::vector<Rational> v(c_);
    for (size_t k = 0; k < v.size(); ++k) v[k] += o.c_[k];
    return Cyclotomic(m_, std::move(v));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Cyclotomic(m_, std::move(v));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (o.is_rational()) {
        std::vector<Rational> v(c_);
        for (auto& x : v) x *= o.c_[0];
        return Cyclotomic(m_, std::move(v));
    }
    if (is_rational()) return o * *this;
    if (m_ != o.m_) {
        long L = common_order(m_, o.m_);
        return lift(L) * o.lift(L);
    }
    size_t n = c_.size();
    std::vector<Rational> v(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (o.c_[j] != 0) v[i + j] += c_[i] * o.c_[j];
    }
    reduce_mod_phi(v, m_);
    return Cyclotomic(m_, std::move(v));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (m_ != o.m_) {
        if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
        long L = common_order(m_, o.m_);
        return lift(L).c_ == o.lift(L).c_;
    }
    return c_ == o.c_;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    require(is_rational(), Errc::invalid_input, "cyclotomic element is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::inverse() const {
    require(!is_zero(), Errc::invalid_input, "inverse of zero");
    if (is_rational()) return Cyclotomic(1 / c_[0]);
    long n = static_cast<long>(c_.size());
    // columns: this * z^j
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1, Rational(0)));
    Cyclotomic col = *this;
    Cyclotomic z = zeta(m_, 1);
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) A[i][j] = col.c_[i];
        col = col * z;
    }
    A[0][n] = 1;
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long i = c; i < n; ++i)
            if (A[i][c] != 0) { piv = i; break; }
        require(piv >= 0, Errc::internal_consistency, "singular multiplication matrix");
        std::swap(A[piv], A[c]);
        Rational inv = 1 / A[c][c];
        for (long k = c; k <= n; ++k) A[c][k] *= inv;
        for (long i = 0; i < n; ++i) {
            if (i == c || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (long k = c; k <= n; ++k) A[i][k] -= f * A[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (long i = 0; i < n; ++i) x[i] = A[i][n];
    return Cyclotomic(m_, std::move(x));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Cyclotomic Cyclotomic::galois(long a) const {
    require(gcd_l(a, m_) == 1, Errc::invalid_input, "Galois exponent must be prime to the order");
    long am = mod_l(a, m_);
    std::vector<Rational> v(m_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) v[(k * am) % m_] += c_[k];
    return from_powers(m_, v);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::complex<long double> Cyclotomic::to_complex_ld() const {
    std::complex<long double> s = 0;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / m_;
        long double c = static_cast<long double>(mpq_get_d(c_[k].get_mpq_t()));
        // exact-ish for big rationals: use mpf via double is enough for our magnitudes
        s += c * std::complex<long double>(std::cos(t), std::sin(t));
    }
    return s;
}

Complex Cyclotomic::to_complex() const {
    auto z = to_complex_ld();
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].get_str() << ")";
        if (k > 0) os << "*z" << m_ << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

// ---- RadicalMonomial

RadicalMonomial::RadicalMonomial(const Rational& c, const RootOfUnity& z, long rad)
    : coeff_(c), root_(z), rad_(rad) {
    require(rad >= 1, Errc::invalid_input, "radicand must be positive");
    normalize();
}

void RadicalMonomial::normalize() {
    // pull square factors out of the radicand
    long a = rad_, outside = 1, inside = 1;
    for (long d = 2; d * d <= a; ++d) {
        long e = 0;
        while (a % d == 0) { a /= d; ++e; }
        outside *= ipow(d, e / 2);
        if (e % 2) inside *= d;
    }
    inside *= a;
    rad_ = inside;
    coeff_ *= outside;
    if (coeff_ < 0) {
        coeff_ = -coeff_;
        root_ = root_ * RootOfUnity::minus_one();
    }
    root_ = root_.reduced();
    if (coeff_ == 0) {
        root_ = RootOfUnity();
        rad_ = 1;
    }
}

RadicalMonomial RadicalMonomial::q_half_power(long q, long k) {
    require(q >= 1, Errc::invalid_input, "q must be positive");
    long e = k >= 0 ? k : -k;
    Rational c = rpow(Rational(q), e / 2);
    RadicalMonomial r(c, RootOfUnity(), (e % 2) ? q : 1);
    return k >= 0 ? r : r.inverse();
}

RadicalMonomial RadicalMonomial::operator*(const RadicalMonomial& o) const {
    long g = gcd_l(rad_, o.rad_);
    // sqrt(a) sqrt(b) = g sqrt(ab/g^2)
    RadicalMonomial r(coeff_ * o.coeff_ * g, root_ * o.root_, (rad_ / g) * (o.rad_ / g));
    return r;
}

RadicalMonomial RadicalMonomial::inverse() const {
    require(coeff_ != 0, Errc::invalid_input, "inverse of zero");
    // 1/sqrt(r) = sqrt(r)/r
    return RadicalMonomial(1 / (coeff_ * rad_), root_.inverse(), rad_);
}

RadicalMonomial RadicalMonomial::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RadicalMonomial r(1);
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool RadicalMonomial::operator==(const RadicalMonomial& o) const {
    return coeff_ == o.coeff_ && root_ == o.root_ && rad_ == o.rad_;
}

Rational RadicalMonomial::valuation(long p) const {
    require(coeff_ != 0, Errc::invalid_input, "valuation of zero");
    Rational v(padic_valuation(coeff_, p));
    if (rad_ % p == 0) v += Rational(1, 2);
    return v;
}

Cyclotomic RadicalMonomial::to_cyclotomic() const {
    Cyclotomic r = Cyclotomic(coeff_) * Cyclotomic(root_);
    if (rad_ != 1) r = r * Cyclotomic::sqrt_int(rad_);
    return r;
}

Complex RadicalMonomial::to_complex() const {
    return mpq_get_d(coeff_.get_mpq_t()) * std::sqrt(static_cast<double>(rad_)) * root_.to_complex();
}

std::string RadicalMonomial::to_string() const {
    std::ostringstream os;
    os << coeff_.get_str();
    if (!root_.is_one()) os << "*e(" << root_.exponent() << "/" << root_.order() << ")";
    if (rad_ != 1) os << "*sqrt(" << rad_ << ")";
    return os.str();
}

}  // namespace asai
