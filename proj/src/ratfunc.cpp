#include "asai/ratfunc.hpp"

#include "asai/error.hpp"

#include <cmath>
#include <sstream>

namespace asai {

void LaurentPoly::add_term(int k, const Cyclotomic& c) {
    auto it = t_.find(k);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly LaurentPoly::monomial(const Cyclotomic& c, int k) {
    LaurentPoly p;
    p.add_term(k, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus(const Cyclotomic& a, int k) {
    LaurentPoly p(1);
    p.add_term(k, -a);
    return p;
}

int LaurentPoly::min_degree() const { return t_.empty() ? 0 : t_.begin()->first; }
int LaurentPoly::max_degree() const { return t_.empty() ? 0 : t_.rbegin()->first; }

Cyclotomic LaurentPoly::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Cyclotomic(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [a, x] : t_)
        for (const auto& [b, y] : o.t_) r.add_term(a + b, x * y);
    return r;
}

LaurentPoly LaurentPoly::substitute(const Cyclotomic& a, int e) const {
    require(e == 1 || e == -1, Errc::invalid_input, "substitution exponent must be +-1");
    LaurentPoly r;
    for (const auto& [k, c] : t_) r.add_term(e * k, c * a.pow(k));
    return r;
}

Complex LaurentPoly::eval(Complex x) const {
    Complex s = 0;
    for (const auto& [k, c] : t_) s += c.to_complex() * std::pow(x, k);
    return s;
}

static double falling(int k, int j) {
    double r = 1;
    for (int i = 0; i < j; ++i) r *= k - i;
    return r;
}

Complex LaurentPoly::eval_derivative(Complex x, int j) const {
    Complex s = 0;
    for (const auto& [k, c] : t_) s += c.to_complex() * falling(k, j) * std::pow(x, k - j);
    return s;
}

double LaurentPoly::magnitude(Complex x) const {
    double s = 0;
    for (const auto& [k, c] : t_) s += std::abs(c.to_complex()) * std::pow(std::abs(x), k);
    return s;
}

Cyclotomic LaurentPoly::eval(const Cyclotomic& x) const {
    Cyclotomic s(0);
    for (const auto& [k, c] : t_) s += c * x.pow(k);
    return s;
}

LaurentPoly LaurentPoly::divide_linear(const Cyclotomic& x) const {
    if (t_.empty()) return {};
    int lo = min_degree(), hi = max_degree();
    // coefficients of X^{-lo} * this, a polynomial of degree hi - lo
    std::vector<Cyclotomic> a(hi - lo + 1, Cyclotomic(0));
    for (const auto& [k, c] : t_) a[k - lo] = c;
    int d = hi - lo;
    std::vector<Cyclotomic> b(std::max(d, 1), Cyclotomic(0));
    if (d == 0) fail(Errc::internal_consistency, "nonzero constant has no linear factor");
    b[d - 1] = a[d];
    for (int k = d - 1; k >= 1; --k) b[k - 1] = a[k] + x * b[k];
    require((a[0] + x * b[0]).is_zero(), Errc::internal_consistency, "not a root");
    LaurentPoly r;
    for (int k = 0; k < d; ++k) r.add_term(k + lo, b[k]);
    return r;
}

int LaurentPoly::vanishing_order(const Cyclotomic& x) const {
    if (t_.empty()) fail(Errc::internal_consistency, "order of vanishing of the zero polynomial");
    int m = 0;
    LaurentPoly p = *this;
    while (p.eval(x).is_zero()) {
        p = p.divide_linear(x);
        ++m;
    }
    return m;
}

std::string LaurentPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k) os << "*X^" << k;
    }
    return os.str();
}

// ---- RationalFunctionInQs

RationalFunctionInQs::RationalFunctionInQs(LaurentPoly num, LaurentPoly den, long q)
    : num_(std::move(num)), den_(std::move(den)), q_(q) {
    require(!den_.is_zero(), Errc::invalid_input, "zero denominator");
    require(q_ >= 1, Errc::invalid_input, "base q must be positive");
}

RationalFunctionInQs RationalFunctionInQs::euler(const Cyclotomic& a, long q, int k) {
    return {LaurentPoly(1), LaurentPoly::one_minus(a, k), q};
}

static long common_base(long a, long b) {
    if (a == 1) return b;
    if (b == 1) return a;
    require(a == b, Errc::invalid_input, "rational functions in different bases");
    return a;
}

RationalFunctionInQs RationalFunctionInQs::operator*(const RationalFunctionInQs& o) const {
    return {num_ * o.num_, den_ * o.den_, common_base(q_, o.q_)};
}

RationalFunctionInQs RationalFunctionInQs::operator/(const RationalFunctionInQs& o) const {
    return *this * o.inverse();
}

RationalFunctionInQs RationalFunctionInQs::inverse() const {
    require(!num_.is_zero(), Errc::invalid_input, "inverse of zero rational function");
    return {den_, num_, q_};
}

bool RationalFunctionInQs::equals(const RationalFunctionInQs& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunctionInQs RationalFunctionInQs::reflect() const {
    Cyclotomic qi(Rational(1, q_));
    return {num_.substitute(qi, -1), den_.substitute(qi, -1), q_};
}

RationalFunctionInQs RationalFunctionInQs::shift(long a) const {
    Cyclotomic f(rpow(Rational(q_), -a));
    return {num_.substitute(f, 1), den_.substitute(f, 1), q_};
}

Complex RationalFunctionInQs::eval(Complex s) const {
    return eval_X(std::exp(-s * std::log(static_cast<double>(q_))));
}

namespace {

// smallest j with the j-th derivative clearly nonzero at x
int numeric_order(const LaurentPoly& p, Complex x) {
    constexpr double tol = 1e-10;
    int deg = p.max_degree() - p.min_degree();
    for (int j = 0; j <= deg; ++j) {
        double scale = 0;
        for (const auto& [k, c] : p.terms()) {
            double f = 1;
            for (int i = 0; i < j; ++i) f *= std::abs(static_cast<double>(k - i));
            scale += std::abs(c.to_complex()) * f * std::pow(std::abs(x), k - j);
        }
        if (scale == 0) continue;
        if (std::abs(p.eval_derivative(x, j)) > tol * scale) return j;
    }
    return deg;
}

}  // namespace

Complex RationalFunctionInQs::eval_X(Complex x) const {
    int md = numeric_order(den_, x);
    if (md == 0) return num_.eval(x) / den_.eval(x);
    int mn = numeric_order(num_, x);
    if (mn < md) fail(Errc::pole_at_s, "pole of order " + std::to_string(md - mn), md - mn);
    if (mn > md) return 0;
    return num_.eval_derivative(x, md) / den_.eval_derivative(x, md);
}

Cyclotomic RationalFunctionInQs::eval_X(const Cyclotomic& x) const {
    Cyclotomic d = den_.eval(x);
    if (!d.is_zero()) return num_.eval(x) / d;
    int md = den_.vanishing_order(x);
    int mn = num_.is_zero() ? md : num_.vanishing_order(x);
    if (mn < md) fail(Errc::pole_at_s, "pole of order " + std::to_string(md - mn), md - mn);
    if (mn > md || num_.is_zero()) return Cyclotomic(0);
    LaurentPoly a = num_, b = den_;
    for (int i = 0; i < md; ++i) {
        a = a.divide_linear(x);
        b = b.divide_linear(x);
    }
    return a.eval(x) / b.eval(x);
}

Cyclotomic RationalFunctionInQs::eval_exact(long s) const {
    return eval_X(Cyclotomic(rpow(Rational(q_), -s)));
}

std::string RationalFunctionInQs::to_string() const {
    return "[" + num_.to_string() + "] / [" + den_.to_string() + "]  (X = " + std::to_string(q_) + "^-s)";
}

}  // namespace asai
