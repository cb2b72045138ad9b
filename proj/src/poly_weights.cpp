#include "asai/poly_weights.hpp"

#include "asai/error.hpp"

#include <sstream>

namespace asai {

namespace {
constexpr int idx(Var v) { return static_cast<int>(v); }
const char* kVarNames[kNumVars] = {"X", "Y", "Xc", "Yc", "U", "V", "A", "B"};
}  // namespace

HomogeneousPoly::HomogeneousPoly(const Rational& c) { add(Exponents{}, c); }

HomogeneousPoly HomogeneousPoly::var(Var v) {
    Exponents e{};
    e[idx(v)] = 1;
    return monomial(1, e);
}

HomogeneousPoly HomogeneousPoly::monomial(const Rational& c, const Exponents& e) {
    HomogeneousPoly p;
    p.add(e, c);
    return p;
}

HomogeneousPoly HomogeneousPoly::xy(const Rational& c, int a, int b) {
    Exponents e{};
    e[idx(Var::X)] = a;
    e[idx(Var::Y)] = b;
    return monomial(c, e);
}

void HomogeneousPoly::add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

Rational HomogeneousPoly::coeff(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
}

int HomogeneousPoly::pair_degree(Var x, Var y) const {
    int d = -2;
    for (const auto& [e, c] : t_) {
        int k = e[idx(x)] + e[idx(y)];
        if (d == -2) d = k;
        else if (d != k) return -1;
    }
    return d == -2 ? 0 : d;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
    HomogeneousPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add(e, c);
    return r;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const {
    HomogeneousPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add(e, -c);
    return r;
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& o) const {
    HomogeneousPoly r;
    for (const auto& [a, x] : t_)
        for (const auto& [b, y] : o.t_) {
            Exponents e;
            for (int k = 0; k < kNumVars; ++k) e[k] = a[k] + b[k];
            r.add(e, x * y);
        }
    return r;
}

HomogeneousPoly HomogeneousPoly::operator*(const Rational& c) const {
    HomogeneousPoly r;
    for (const auto& [e, x] : t_) r.add(e, x * c);
    return r;
}

HomogeneousPoly HomogeneousPoly::pow(int e) const {
    HomogeneousPoly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

HomogeneousPoly HomogeneousPoly::derivative(Var v) const {
    HomogeneousPoly r;
    for (const auto& [e, c] : t_) {
        int k = e[idx(v)];
        if (!k) continue;
        Exponents f = e;
        f[idx(v)] = k - 1;
        r.add(f, c * k);
    }
    return r;
}

HomogeneousPoly HomogeneousPoly::rename(Var from, Var to) const {
    HomogeneousPoly r;
    for (const auto& [e, c] : t_) {
        Exponents f = e;
        f[idx(to)] += f[idx(from)];
        f[idx(from)] = 0;
        r.add(f, c);
    }
    return r;
}

HomogeneousPoly HomogeneousPoly::coeff_in(Var v, int k) const {
    HomogeneousPoly r;
    for (const auto& [e, c] : t_) {
        if (e[idx(v)] != k) continue;
        Exponents f = e;
        f[idx(v)] = 0;
        r.add(f, c);
    }
    return r;
}

std::string HomogeneousPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int k = 0; k < kNumVars; ++k) {
            if (e[k] == 1) os << "*" << kVarNames[k];
            else if (e[k] > 1) os << "*" << kVarNames[k] << "^" << e[k];
        }
    }
    return os.str();
}

// ---- pairing

static void require_degree(const HomogeneousPoly& P, int n, Var x, Var y) {
    if (P.is_zero()) return;
    int d = P.pair_degree(x, y);
    require(d == n, Errc::invalid_input, "polynomial is not homogeneous of degree " + std::to_string(n));
    for (const auto& [e, c] : P.terms())
        for (int k = 0; k < kNumVars; ++k)
            if (k != static_cast<int>(x) && k != static_cast<int>(y) && e[k] != 0)
                fail(Errc::invalid_input, "pairing argument involves other variables");
}

Rational pairing_n(const HomogeneousPoly& P, const HomogeneousPoly& Q, int n, Var x, Var y) {
    require(n >= 0, Errc::invalid_input, "negative degree");
    require_degree(P, n, x, y);
    require_degree(Q, n, x, y);
    Rational s = 0;
    for (const auto& [e, c] : P.terms()) {
        int i = e[idx(x)];
        HomogeneousPoly::Exponents f{};
        f[idx(x)] = n - i;
        f[idx(y)] = i;
        Rational d = Q.coeff(f);
        if (d == 0) continue;
        Rational w = c * d / Rational(binom(n, i));
        s += (i % 2) ? Rational(-w) : w;
    }
    return s;
}

Cyclotomic pairing_with_linear_power(const HomogeneousPoly& P, const Cyclotomic& c, int n, Var x, Var y) {
    require_degree(P, n, x, y);
    Cyclotomic s(0), mc = -c;
    for (const auto& [e, a] : P.terms()) s += Cyclotomic(a) * mc.pow(e[idx(x)]);
    return s;
}

HomogeneousPoly dual_element(int a, int n, Var x, Var y) {
    require(0 <= a && a <= n, Errc::invalid_input, "monomial exponent out of range");
    HomogeneousPoly::Exponents e{};
    e[idx(x)] = n - a;
    e[idx(y)] = a;
    Rational c(binom(n, a));
    return HomogeneousPoly::monomial(a % 2 ? Rational(-c) : c, e);
}

// ---- v polynomials

HomogeneousPoly VPolynomialTriple::reexpand(int j) const {
    HomogeneousPoly r;
    for (int i = -n - 1; i <= n + 1; ++i)
        r = r + v.at({i, j}) * dual_element(n + 1 + i, 2 * n + 2, Var::U, Var::V);
    return r;
}

VPolynomialTriple v_polynomials(int n) {
    require(n >= 0, Errc::invalid_input, "n must be non-negative");
    using H = HomogeneousPoly;
    H X = H::var(Var::X), Y = H::var(Var::Y), Xc = H::var(Var::Xc), Yc = H::var(Var::Yc);
    H U = H::var(Var::U), V = H::var(Var::V), A = H::var(Var::A), B = H::var(Var::B);
    H E = (X * V - U * Y).pow(n) * (Yc * V + Xc * U).pow(n) * (A * V - U * B).pow(2);
    VPolynomialTriple vt;
    vt.n = n;
    vt.P[-2] = E.coeff_in(Var::A, 2).coeff_in(Var::B, 0);
    vt.P[0] = E.coeff_in(Var::A, 1).coeff_in(Var::B, 1);
    vt.P[2] = E.coeff_in(Var::A, 0).coeff_in(Var::B, 2);
    for (int i = -n - 1; i <= n + 1; ++i) {
        int a = n + 1 + i;
        Rational norm(binom(2 * n + 2, a));
        if (a % 2) norm = -norm;
        for (int j : {-2, 0, 2}) {
            H c = vt.P[j].coeff_in(Var::U, n + 1 - i).coeff_in(Var::V, n + 1 + i);
            vt.v[{i, j}] = c * Rational(1 / norm);
        }
    }
    return vt;
}

HomogeneousPoly upsilon(const HomogeneousPoly& P, int alpha, int n) {
    require(0 <= alpha && alpha <= n, Errc::invalid_input, "alpha out of range");
    if (!P.is_zero()) {
        require(P.pair_degree(Var::X, Var::Y) == n && P.pair_degree(Var::Xc, Var::Yc) == n, Errc::invalid_input,
                "upsilon expects bidegree (n, n)");
    }
    HomogeneousPoly Q = P;
    for (int k = 0; k < alpha; ++k)
        Q = Q.derivative(Var::X).derivative(Var::Yc) - Q.derivative(Var::Xc).derivative(Var::Y);
    Rational f(factorial(alpha));
    Q = Q * Rational(1 / (f * f));
    return Q.rename(Var::Xc, Var::X).rename(Var::Yc, Var::Y);
}

// ---- C(alpha, i)

Rational c_constant(int n, int alpha, int i) {
    require(0 <= alpha && alpha <= n && -n - 1 <= i && i <= n + 1, Errc::invalid_input, "index out of range");
    if ((i - alpha) % 2) return 0;
    Integer sum = 0;
    for (int t = 0; t <= alpha; ++t) {
        Integer term = binom(alpha, t) * binom(2 * n - 2 * alpha + 2, n - 2 * t + i + 1);
        sum += (t % 2) ? Integer(-term) : term;
    }
    Integer b = binom(n, alpha);
    Rational r(b * b * sum, binom(2 * n + 2, n + 1 - i));
    r.canonicalize();
    int sign = (n % 2 ? -1 : 1) * (((i - alpha) / 2) % 2 ? -1 : 1);
    return sign < 0 ? Rational(-r) : r;
}

Cyclotomic upv_pairing_value(const VPolynomialTriple& vt, int alpha, int i, int j) {
    int n = vt.n;
    HomogeneousPoly u = upsilon(vt.v.at({i, j}), alpha, n);
    // [P, (X - sqrt(-1) Y)^N] = P(sqrt(-1), 1)
    return pairing_with_linear_power(u, -Cyclotomic::zeta(4), 2 * n - 2 * alpha);
}

Cyclotomic upv_pairing_value(int n, int alpha, int i, int j) {
    return upv_pairing_value(v_polynomials(n), alpha, i, j);
}

Cyclotomic upv_closed_form_value(int n, int alpha, int i, int j) {
    require(0 <= alpha && alpha <= n && -n - 1 <= i && i <= n + 1, Errc::invalid_input, "index out of range");
    require(j == -2 || j == 0 || j == 2, Errc::invalid_input, "j must be -2, 0 or 2");
    Integer b = binom(n, alpha);
    Rational pre(b * b, binom(2 * n + 2, n + 1 - i));
    pre.canonicalize();
    if ((n - alpha) % 2) pre = -pre;
    int shift = j == -2 ? 1 : (j == 0 ? 0 : -1);
    Integer sum = 0;
    for (int t = 0; t <= alpha; ++t) {
        Integer term = binom(alpha, t) * binom(2 * n - 2 * alpha, n + shift - i - 2 * t);
        sum += (t % 2) ? Integer(-term) : term;
    }
    Rational c = pre * Rational(sum) * (j == 0 ? 2 : 1);
    int ipow = alpha + i + (j == -2 ? -1 : (j == 0 ? 0 : 1));
    return Cyclotomic(c) * Cyclotomic::zeta(4, ipow);
}

Cyclotomic c_constant_definitional(const VPolynomialTriple& vt, int alpha, int i) {
    Cyclotomic I = Cyclotomic::zeta(4);
    return upv_pairing_value(vt, alpha, i, 0) + I * upv_pairing_value(vt, alpha, i, -2) -
           I * upv_pairing_value(vt, alpha, i, 2);
}

Cyclotomic c_constant_definitional(int n, int alpha, int i) {
    return c_constant_definitional(v_polynomials(n), alpha, i);
}

Rational c_constant_checked(int n, int alpha, int i) {
    Rational closed = c_constant(n, alpha, i);
    Cyclotomic def = c_constant_definitional(n, alpha, i);
    if (def != Cyclotomic(closed))
        fail(Errc::internal_consistency, "C(" + std::to_string(alpha) + "," + std::to_string(i) +
                                             ") routes disagree: closed " + closed.get_str() + ", definitional " +
                                             def.to_string());
    return closed;
}

CComparison compare_c_constants(int n) {
    CComparison cmp;
    cmp.n = n;
    VPolynomialTriple vt = v_polynomials(n);
    for (int alpha = 0; alpha <= n; ++alpha) {
        for (int i = -n - 1; i <= n + 1; ++i) {
            Rational closed = c_constant(n, alpha, i);
            Cyclotomic def = c_constant_definitional(vt, alpha, i);
            ++cmp.compared;
            if (def == Cyclotomic(closed)) ++cmp.equal;
            if ((i - alpha) % 2) {
                if (!def.is_zero()) ++cmp.odd_parity_nonzero;
                continue;
            }
            Rational expect = ((n + alpha) % 2) ? Rational(-closed) : closed;
            if (def != Cyclotomic(expect)) cmp.sign_relation_holds = false;
            if (closed == 0) continue;
            Cyclotomic ratio = def / Cyclotomic(closed);
            if (ratio == Cyclotomic(1)) ++cmp.ratio_sign_plus;
            else if (ratio == Cyclotomic(-1)) ++cmp.ratio_sign_minus;
            else ++cmp.ratio_other;
        }
    }
    return cmp;
}

// ---- ranks

long rational_rank(std::vector<std::vector<Rational>> m) {
    long rank = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

long pairing_gram_rank(int n) {
    std::vector<std::vector<Rational>> g(n + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            g[i][j] = pairing_n(HomogeneousPoly::xy(1, i, n - i), HomogeneousPoly::xy(1, j, n - j), n);
    return rational_rank(g);
}

long upsilon_rank(int n) {
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            HomogeneousPoly::Exponents e{};
            e[idx(Var::X)] = a;
            e[idx(Var::Y)] = n - a;
            e[idx(Var::Xc)] = b;
            e[idx(Var::Yc)] = n - b;
            HomogeneousPoly P = HomogeneousPoly::monomial(1, e);
            std::vector<Rational> row;
            for (int alpha = 0; alpha <= n; ++alpha) {
                HomogeneousPoly u = upsilon(P, alpha, n);
                int N = 2 * n - 2 * alpha;
                for (int c = 0; c <= N; ++c) {
                    HomogeneousPoly::Exponents f{};
                    f[idx(Var::X)] = c;
                    f[idx(Var::Y)] = N - c;
                    row.push_back(u.coeff(f));
                }
            }
            rows.push_back(std::move(row));
        }
    return rational_rank(rows);
}

}  // namespace asai
