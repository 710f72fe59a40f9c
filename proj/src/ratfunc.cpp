#include "plv/ratfunc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace plv {

// ---------------------------------------------------------------- RatPoly --

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const mpq_class& v) {
    if (v == 0) return RatPoly{};
    return RatPoly{{v}};
}

RatPoly RatPoly::variable() { return RatPoly{{mpq_class(0), mpq_class(1)}}; }

const mpq_class& RatPoly::coeff(int i) const {
    static const mpq_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const mpq_class& RatPoly::lc() const {
    if (c_.empty()) throw std::logic_error("lc of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return RatPoly{std::move(c)};
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly{};
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly{std::move(c)};
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    if (s == 0) return RatPoly{};
    RatPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> rem = num.c_;
    const int dd = den.degree();
    if (num.degree() < dd) return {RatPoly{}, num};
    std::vector<mpq_class> quo(num.degree() - dd + 1);
    for (int i = num.degree(); i >= dd; --i) {
        mpq_class q = rem[i] / den.c_.back();
        if (q == 0) continue;
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.c_[j];
    }
    return {RatPoly{std::move(quo)}, RatPoly{std::move(rem)}};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly{};
    std::vector<mpq_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly{std::move(d)};
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lc());
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly acc = RatPoly::constant(1);
    RatPoly base = *this;
    while (e > 0) {
        if (e & 1U) acc = acc * base;
        base = base * base;
        e >>= 1U;
    }
    return acc;
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PrecComplex RatPoly::eval(const PrecComplex& x) const {
    PrecComplex acc(x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + PrecComplex(PrecReal::of(*it, x.precision()));
    }
    return acc;
}

bool operator<(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i) == 0) continue;
        mpq_class v = coeff(i);
        if (first) {
            if (v < 0) { out << "-"; v = -v; }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            out << v.get_str();
        } else {
            if (v != 1) out << v.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- RatFunc --

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = RatPoly::constant(1);
        return;
    }
    RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = RatPoly::divrem(num_, g).first;
        den_ = RatPoly::divrem(den_, g).first;
    }
    const mpq_class scale = 1 / den_.lc();
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc::constant(1);
    if (is_zero() && e < 0) throw std::domain_error("RatFunc: negative power of zero");
    const unsigned mag = static_cast<unsigned>(e < 0 ? -e : e);
    RatFunc base = e < 0 ? RatFunc{den_, num_} : *this;
    return {base.num_.pow(mag), base.den_.pow(mag)};
}

PrecComplex RatFunc::eval(const PrecComplex& x) const {
    const PrecComplex d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == RatPoly::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

// ---------------------------------------------------- integer poly helpers --

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly zmod(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    for (auto& v : r) {
        v %= m;
        if (v < 0) v += m;
    }
    ztrim(r);
    return r;
}

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] += b[i];
    }
    return zmod(c, m);
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] -= b[i];
    }
    return zmod(c, m);
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) { return zmod(zmul(a, b), m); }

// Division by a *monic* divisor, coefficients mod m.
std::pair<ZPoly, ZPoly> zdivrem_monic_mod(const ZPoly& num, const ZPoly& den, const mpz_class& m) {
    assert(!den.empty() && den.back() == 1);
    ZPoly rem = num;
    const int dd = static_cast<int>(den.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < dd) return {{}, rem};
    ZPoly quo(rem.size() - den.size() + 1);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        mpz_class q = rem[i] % m;
        if (q < 0) q += m;
        if (q == 0) { rem[i] = 0; continue; }
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den[j];
        rem[i] = 0;
    }
    return {zmod(quo, m), zmod(rem, m)};
}

// Extended Euclid over F_p[x]: s*a + t*b = 1 (a, b coprime mod p).
void zext_euclid_fp(const ZPoly& a, const ZPoly& b, const mpz_class& p, ZPoly& s, ZPoly& t) {
    ZPoly r0 = zmod(a, p), r1 = zmod(b, p);
    ZPoly s0 = {mpz_class(1)}, s1 = {};
    ZPoly t0 = {}, t1 = {mpz_class(1)};
    while (!r1.empty()) {
        // make r1 monic for the monic divrem, fold the unit back in
        mpz_class inv_lc;
        if (mpz_invert(inv_lc.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t()) == 0) {
            throw std::logic_error("ext_euclid_fp: leading coefficient not invertible");
        }
        ZPoly r1m = r1;
        for (auto& v : r1m) v = v * inv_lc % p;
        auto [q, r] = zdivrem_monic_mod(r0, r1m, p);
        for (auto& v : q) v = v * inv_lc % p;  // quotient w.r.t. the original r1
        ZPoly s2 = zsub_mod(s0, zmul_mod(q, s1, p), p);
        ZPoly t2 = zsub_mod(t0, zmul_mod(q, t1, p), p);
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.size() != 1) throw std::logic_error("ext_euclid_fp: inputs not coprime");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
    s = s0;
    t = t0;
    for (auto& v : s) v = v * inv % p;
    for (auto& v : t) v = v * inv % p;
    // Normalize to deg s < deg b (the Hensel step needs this); the matching
    // correction keeps s*a + t*b = 1.
    if (b.size() >= 2 && s.size() >= b.size()) {
        mpz_class inv_lc;
        mpz_invert(inv_lc.get_mpz_t(), zmod(b, p).back().get_mpz_t(), p.get_mpz_t());
        ZPoly bm = zmod(b, p);
        for (auto& v : bm) v = v * inv_lc % p;
        auto [q, r] = zdivrem_monic_mod(s, bm, p);
        for (auto& v : q) v = v * inv_lc % p;
        s = r;
        t = zadd_mod(t, zmul_mod(q, zmod(a, p), p), p);
    }
}

ZPoly zgcd_fp(ZPoly a, ZPoly b, const mpz_class& p) {
    a = zmod(a, p);
    b = zmod(b, p);
    while (!b.empty()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
        ZPoly bm = b;
        for (auto& v : bm) v = v * inv % p;
        ZPoly r = zdivrem_monic_mod(a, bm, p).second;
        a = b;
        b = r;
    }
    if (!a.empty()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
        for (auto& v : a) v = v * inv % p;
    }
    return a;
}

ZPoly zderiv(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
    return d;
}

ZPoly zpowmod_f(const ZPoly& base, const mpz_class& e, const ZPoly& f_monic, const mpz_class& p) {
    ZPoly acc = {mpz_class(1)};
    ZPoly b = zdivrem_monic_mod(base, f_monic, p).second;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = zdivrem_monic_mod(zmul_mod(acc, b, p), f_monic, p).second;
        b = zdivrem_monic_mod(zmul_mod(b, b, p), f_monic, p).second;
        n /= 2;
    }
    return acc;
}

// Berlekamp factorization of a monic squarefree polynomial mod a small prime.
std::vector<ZPoly> berlekamp(const ZPoly& f, const mpz_class& p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // Rows of Q: x^(p*i) mod f.
    std::vector<std::vector<mpz_class>> q(n, std::vector<mpz_class>(n));
    ZPoly xp = zpowmod_f(ZPoly{mpz_class(0), mpz_class(1)}, p, f, p);
    ZPoly row = {mpz_class(1)};
    for (int i = 0; i < n; ++i) {
        for (int jj = 0; jj < n; ++jj) q[i][jj] = jj < static_cast<int>(row.size()) ? row[jj] : 0;
        row = zdivrem_monic_mod(zmul_mod(row, xp, p), f, p).second;
    }
    // Kernel of (Q - I)^T.
    std::vector<std::vector<mpz_class>> mat(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            mat[i][jj] = (q[jj][i] - (i == jj ? 1 : 0)) % p;
            if (mat[i][jj] < 0) mat[i][jj] += p;
        }
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (mat[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(mat[piv], mat[rank]);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), mat[rank][col].get_mpz_t(), p.get_mpz_t());
        for (int c = 0; c < n; ++c) mat[rank][c] = mat[rank][c] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            const mpz_class factor = mat[r][col];
            for (int c = 0; c < n; ++c) {
                mat[r][c] = (mat[r][c] - factor * mat[rank][c]) % p;
                if (mat[r][c] < 0) mat[r][c] += p;
            }
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<ZPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        ZPoly v(n);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) {
            v[pivot_col[r]] = (p - mat[r][col]) % p;
        }
        ztrim(v);
        basis.push_back(std::move(v));
    }
    const size_t r_factors = basis.size();
    std::vector<ZPoly> factors = {f};
    for (const ZPoly& v : basis) {
        if (factors.size() == r_factors) break;
        if (v.size() <= 1) continue;  // the constant solution never splits
        std::vector<ZPoly> next;
        for (ZPoly& u : factors) {
            if (u.size() <= 2) {
                next.push_back(std::move(u));
                continue;
            }
            ZPoly current = std::move(u);
            for (mpz_class s = 0; s < p && current.size() > 2; ++s) {
                ZPoly shifted = v;
                shifted[0] = (shifted[0] - s) % p;
                if (shifted[0] < 0) shifted[0] += p;
                ztrim(shifted);
                ZPoly g = zgcd_fp(current, shifted, p);
                if (g.size() > 1 && g.size() < current.size()) {
                    next.push_back(g);  // monic from zgcd_fp
                    current = zdivrem_monic_mod(current, g, p).first;
                }
            }
            next.push_back(std::move(current));
        }
        factors = std::move(next);
    }
    return factors;
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
// with f, g, h monic, to the same data mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    const mpz_class m2 = m * m;
    ZPoly e = zsub_mod(f, zmul(g, h), m2);
    auto [q, r] = zdivrem_monic_mod(zmul_mod(s, e, m2), h, m2);
    ZPoly g1 = zadd_mod(g, zadd_mod(zmul_mod(t, e, m2), zmul_mod(q, g, m2), m2), m2);
    ZPoly h1 = zadd_mod(h, r, m2);
    assert(h1.size() == h.size() && h1.back() == 1);
    assert(g1.size() == g.size() && g1.back() == 1);

    ZPoly b = zsub_mod(zadd_mod(zmul_mod(s, g1, m2), zmul_mod(t, h1, m2), m2), ZPoly{mpz_class(1)}, m2);
    auto [c, d] = zdivrem_monic_mod(zmul_mod(s, b, m2), h1, m2);
    ZPoly s1 = zsub_mod(s, d, m2);
    ZPoly t1 = zsub_mod(t, zadd_mod(zmul_mod(t, b, m2), zmul_mod(c, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lifts the monic factorization f = prod(factors) (mod p) up the modulus
// tower p, p^2, p^4, ... to tower_top.  f must be known mod tower_top.
void hensel_lift_tree(const ZPoly& f, std::vector<ZPoly>& factors, size_t lo, size_t hi,
                      const mpz_class& p, const mpz_class& tower_top) {
    if (hi - lo <= 1) {
        factors[lo] = zmod(f, tower_top);
        return;
    }
    const size_t mid = lo + (hi - lo) / 2;
    ZPoly g = {mpz_class(1)}, h = {mpz_class(1)};
    for (size_t i = lo; i < mid; ++i) g = zmul_mod(g, factors[i], p);
    for (size_t i = mid; i < hi; ++i) h = zmul_mod(h, factors[i], p);
    ZPoly s, t;
    zext_euclid_fp(g, h, p, s, t);
    mpz_class m = p;
    while (m < tower_top) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    hensel_lift_tree(g, factors, lo, mid, p, tower_top);
    hensel_lift_tree(h, factors, mid, hi, p, tower_top);
}

mpz_class zheight(const ZPoly& f) {
    mpz_class h = 0;
    for (const auto& v : f) {
        mpz_class a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

ZPoly zsymmetric(const ZPoly& f, const mpz_class& m) {
    ZPoly r = zmod(f, m);
    for (auto& v : r) {
        if (v * 2 > m) v -= m;
    }
    ztrim(r);
    return r;
}

bool zdivides(const ZPoly& cand, const ZPoly& f) {
    if (cand.empty()) return false;
    // monic candidate: integer division must leave zero remainder
    ZPoly rem = f;
    const int dd = static_cast<int>(cand.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < dd) return false;
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const mpz_class q = rem[i];
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * cand[j];
    }
    for (const auto& v : rem)
        if (v != 0) return false;
    return true;
}

ZPoly zexact_div(const ZPoly& f, const ZPoly& cand) {
    ZPoly rem = f;
    const int dd = static_cast<int>(cand.size()) - 1;
    ZPoly quo(rem.size() - cand.size() + 1);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const mpz_class q = rem[i];
        if (q == 0) continue;
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * cand[j];
    }
    ztrim(quo);
    return quo;
}

// Zassenhaus factorization of a monic squarefree integer polynomial.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    mpz_class p = 0;
    for (long cand : kPrimes) {
        const mpz_class pc(cand);
        ZPoly fp = zmod(f, pc);
        if (static_cast<int>(fp.size()) - 1 != n) continue;  // lc vanished (never: monic)
        ZPoly g = zgcd_fp(fp, zderiv(fp), pc);
        if (g.size() == 1) { p = pc; break; }
    }
    if (p == 0) throw std::runtime_error("factor: no suitable prime below 100");

    std::vector<ZPoly> mods = berlekamp(zmod(f, p), p);
    if (mods.size() == 1) return {f};

    // Landau-Mignotte style bound, deliberately generous.
    mpz_class bound = zheight(f) * (n + 1);
    bound <<= n;
    // Quadratic lifting climbs the tower p, p^2, p^4, ...; every modulus in
    // use is a tower element, so factors stay exact mod tower_top throughout.
    mpz_class tower_top = p;
    while (tower_top <= bound * 2) tower_top = tower_top * tower_top;
    hensel_lift_tree(f, mods, 0, mods.size(), p, tower_top);
    const mpz_class target = tower_top;

    std::vector<ZPoly> result;
    ZPoly remaining = f;
    std::vector<ZPoly> pool = std::move(mods);
    size_t cardinality = 1;
    while (pool.size() > 0 && cardinality * 2 <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(cardinality);
        // enumerate index subsets of the pool of the given cardinality
        std::function<bool(size_t, size_t)> search = [&](size_t pos, size_t start) -> bool {
            if (pos == cardinality) {
                ZPoly cand = {mpz_class(1)};
                for (size_t i : idx) cand = zmul_mod(cand, pool[i], target);
                cand = zsymmetric(cand, target);
                if (cand.empty() || cand.back() != 1) return false;
                if (!zdivides(cand, remaining)) return false;
                result.push_back(cand);
                remaining = zexact_div(remaining, cand);
                std::vector<ZPoly> next_pool;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_pool.push_back(pool[i]);
                pool = std::move(next_pool);
                return true;
            }
            for (size_t i = start; i < pool.size(); ++i) {
                idx[pos] = i;
                if (search(pos + 1, i + 1)) return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found) ++cardinality;
    }
    if (static_cast<int>(remaining.size()) > 1) result.push_back(remaining);
    return result;
}

// Monic rational poly -> scaled monic integer poly T(x) = lc^(n-1) P(x/lc)
// is not needed here: callers pass *integer* content-free polys.  This maps
// an integer poly with leading coefficient L to the monic integer poly
// T(x) = L^(n-1) P(x/L).
ZPoly to_monic_shift(const ZPoly& f, const mpz_class& lead) {
    const int n = static_cast<int>(f.size()) - 1;
    ZPoly t(f.size());
    t[n] = 1;
    mpz_class scale = 1;  // L^(n-1-i)
    for (int i = n - 1; i >= 0; --i) {
        t[i] = f[i] * scale;
        scale *= lead;
    }
    return t;
}

RatPoly zp_to_ratpoly(const ZPoly& f) {
    std::vector<mpq_class> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = mpq_class(f[i]);
    return RatPoly{std::move(c)};
}

}  // namespace

// --------------------------------------------------------------- factoring --

std::map<mpz_class, long> factor_rational(const mpq_class& value) {
    if (value == 0) throw std::domain_error("factor_rational: zero has no factorization");
    std::map<mpz_class, long> out;
    const auto add = [&out](mpz_class v, long mult) {
        if (v < 0) v = -v;
        if (v == 1) return;
        for (mpz_class d = 2; d * d <= v;) {
            if (v % d == 0) {
                long e = 0;
                while (v % d == 0) { v /= d; ++e; }
                out[d] += mult * e;
            }
            d += (d == 2) ? 1 : 2;
            if (d > 100000 && v > 1) break;
        }
        if (v > 1) {
            if (mpz_probab_prime_p(v.get_mpz_t(), 32) == 0) {
                throw std::runtime_error("factor_rational: composite constant beyond trial division");
            }
            out[v] += mult;
        }
    };
    add(value.get_num(), 1);
    add(value.get_den(), -1);
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

std::vector<std::pair<RatPoly, int>> factor_poly(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() < 1) return out;

    // Squarefree decomposition over Q (Yun).
    RatPoly f = p.monic();
    RatPoly fp = f.derivative();
    RatPoly a = RatPoly::gcd(f, fp);
    RatPoly b = RatPoly::divrem(f, a).first;
    RatPoly c = RatPoly::divrem(fp, a).first - b.derivative();
    int mult = 1;
    std::vector<std::pair<RatPoly, int>> squarefree;
    while (b.degree() > 0) {
        RatPoly g = RatPoly::gcd(b, c);
        if (g.degree() > 0) squarefree.emplace_back(g, mult);
        b = RatPoly::divrem(b, g).first;
        c = RatPoly::divrem(c, g).first - b.derivative();
        ++mult;
    }

    for (const auto& [sf, e] : squarefree) {
        // Clear denominators and content to an integer primitive polynomial.
        mpz_class den_lcm = 1;
        for (const auto& q : sf.coeffs()) {
            mpz_class d = q.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        ZPoly zp(sf.coeffs().size());
        mpz_class content = 0;
        for (size_t i = 0; i < zp.size(); ++i) {
            mpq_class scaled = sf.coeffs()[i] * mpq_class(den_lcm);
            zp[i] = scaled.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zp[i].get_mpz_t());
        }
        for (auto& v : zp) v /= content;
        if (zp.back() < 0)
            for (auto& v : zp) v = -v;

        const mpz_class lead = zp.back();
        const ZPoly monic_int = (lead == 1) ? zp : to_monic_shift(zp, lead);
        for (const ZPoly& t : factor_monic_squarefree(monic_int)) {
            RatPoly q = zp_to_ratpoly(t);
            if (lead != 1) {
                // undo x -> x/L: factor of zp is monic-normalized T(L x)
                std::vector<mpq_class> c2(t.size());
                mpq_class pw(1);
                for (size_t i = 0; i < t.size(); ++i) {
                    c2[i] = mpq_class(t[i]) * pw;
                    pw *= lead;
                }
                q = RatPoly{std::move(c2)}.monic();
            }
            out.emplace_back(q, e);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

FactoredElement factor(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("factor: zero element");
    FactoredElement out;

    // Monic irreducible parts of numerator and denominator.
    mpq_class constant(1);
    const auto absorb = [&](const RatPoly& poly, long orientation) {
        if (poly.degree() < 1) {
            constant *= orientation > 0 ? mpq_class(poly.coeff(0)) : 1 / mpq_class(poly.coeff(0));
            return;
        }
        mpq_class lead = poly.lc();
        constant *= orientation > 0 ? lead : 1 / lead;
        for (const auto& [q, e] : factor_poly(poly)) {
            out.irreducible_exponents[q] += orientation * e;
            // factor_poly returns monic factors of the monic-normalized input,
            // so no further constant adjustment is needed here.
        }
    };
    absorb(f.num(), 1);
    absorb(f.den(), -1);

    out.sign = sgn(constant) < 0 ? -1 : 1;
    out.prime_exponents = factor_rational(abs(constant));
    for (auto it = out.irreducible_exponents.begin(); it != out.irreducible_exponents.end();) {
        if (it->second == 0) it = out.irreducible_exponents.erase(it);
        else ++it;
    }
    return out;
}

RatFunc FactoredElement::reconstruct() const {
    RatFunc acc = RatFunc::constant(sign);
    for (const auto& [p, e] : prime_exponents) {
        acc = acc * RatFunc::constant(mpq_class(p)).pow(e);
    }
    for (const auto& [q, e] : irreducible_exponents) {
        acc = acc * RatFunc{q, RatPoly::constant(1)}.pow(e);
    }
    return acc;
}

}  // namespace plv
