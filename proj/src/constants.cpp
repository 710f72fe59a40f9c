#include "plv/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace plv {

namespace {

std::mutex g_const_mutex;
std::map<std::pair<int, mpfr_prec_t>, PrecReal>& constant_memo() {
    static std::map<std::pair<int, mpfr_prec_t>, PrecReal> memo;
    return memo;
}
std::map<std::pair<long, mpfr_prec_t>, PrecReal>& zeta_memo() {
    static std::map<std::pair<long, mpfr_prec_t>, PrecReal> memo;
    return memo;
}

PrecReal compute_raw(ConstantName name, mpfr_prec_t wp) {
    switch (name) {
        case ConstantName::Pi:
            return pi_value(wp);
        case ConstantName::Log2: {
            PrecReal r(wp);
            mpfr_const_log2(r.raw(), MPFR_RNDN);
            return r;
        }
        case ConstantName::Zeta2: {
            PrecReal p = pi_value(wp);
            return p * p / 6L;
        }
        case ConstantName::Zeta3:
            return zeta3_apery(wp);
        case ConstantName::Beta4:
            return dirichlet_beta(4, wp);
        case ConstantName::Catalan:
            return dirichlet_beta(2, wp);
        case ConstantName::LogPhi: {
            // log((1+sqrt 5)/2)
            PrecReal five = PrecReal::of(5L, wp);
            return log((sqrt(five) + 1L) / 2L);
        }
    }
    throw std::logic_error("unreachable constant tag");
}

}  // namespace

ConstantName constant_from_string(std::string_view name) {
    if (name == "pi") return ConstantName::Pi;
    if (name == "log2") return ConstantName::Log2;
    if (name == "zeta2") return ConstantName::Zeta2;
    if (name == "zeta3") return ConstantName::Zeta3;
    if (name == "beta4") return ConstantName::Beta4;
    if (name == "logphi") return ConstantName::LogPhi;
    if (name == "catalan") return ConstantName::Catalan;
    throw std::invalid_argument("unknown constant name: " + std::string(name));
}

std::string_view constant_to_string(ConstantName name) {
    switch (name) {
        case ConstantName::Pi: return "pi";
        case ConstantName::Log2: return "log2";
        case ConstantName::Zeta2: return "zeta2";
        case ConstantName::Zeta3: return "zeta3";
        case ConstantName::Beta4: return "beta4";
        case ConstantName::LogPhi: return "logphi";
        case ConstantName::Catalan: return "catalan";
    }
    return "?";
}

PrecReal constant(ConstantName name, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const auto key = std::make_pair(static_cast<int>(name), precision_bits);
    {
        std::lock_guard<std::mutex> lock(g_const_mutex);
        auto it = constant_memo().find(key);
        if (it != constant_memo().end()) return it->second;
    }

    mpfr_prec_t guard = 64;
    for (int attempt = 0; attempt < 3; ++attempt) {
        PrecReal a = compute_raw(name, precision_bits + guard);
        PrecReal b = compute_raw(name, precision_bits + 2 * guard);
        if (agree_bits(a, b) >= static_cast<int>(precision_bits) + 10) {
            PrecReal out = a.round_to(precision_bits);
            std::lock_guard<std::mutex> lock(g_const_mutex);
            constant_memo().emplace(key, out);
            return out;
        }
        guard *= 2;
    }
    throw std::runtime_error("constant(): verification failed after precision escalation");
}

PrecReal zeta3_apery(mpfr_prec_t wp) {
    // Term magnitude shrinks by ~4x per step (2 bits), plus the n^3 factor.
    const unsigned long n_terms = static_cast<unsigned long>(wp / 2 + 24);
    mpz_class binom = 2;  // binom(2n, n) at n = 1
    PrecReal sum(wp);
    mpfr_set_zero(sum.raw(), 1);
    for (unsigned long n = 1; n <= n_terms; ++n) {
        PrecReal term = PrecReal::of(binom, wp) * static_cast<long>(n * n) * static_cast<long>(n);
        term = PrecReal::of(1L, wp) / term;
        if (n % 2 == 0) term = -term;
        sum += term;
        // binom(2n+2, n+1) = binom(2n, n) * 2(2n+1)/(n+1)
        binom *= 2 * (2 * n + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), n + 1);
    }
    return sum * 5L / 2L;
}

PrecReal dirichlet_beta(long s, mpfr_prec_t wp) {
    if (s < 2) throw std::invalid_argument("dirichlet_beta: s >= 2 required");
    // CRVZ acceleration of sum (-1)^k a_k with a_k = (2k+1)^{-s}; error
    // decays like (3+sqrt 8)^{-n}.
    const long n = static_cast<long>(std::ceil(static_cast<double>(wp) * 0.3933)) + 12;
    PrecReal d = pow_si(PrecReal::of(3L, wp) + sqrt(PrecReal::of(8L, wp)), n);
    d = (d + PrecReal::of(1L, wp) / d) / 2L;
    PrecReal b = PrecReal::of(-1L, wp);
    PrecReal c = -d;
    PrecReal sum(wp);
    mpfr_set_zero(sum.raw(), 1);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        sum += c / pow_si(PrecReal::of(2 * k + 1, wp), s);
        // b <- b (k+n)(k-n) / ((k+1/2)(k+1))
        b = b * (k + n) * (k - n) * 2L / ((2 * k + 1) * (k + 1));
    }
    return sum / d;
}

PrecReal zeta_int(long n, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    if (n == 1) throw std::domain_error("zeta_int: pole at n = 1");
    const auto key = std::make_pair(n, precision_bits);
    {
        std::lock_guard<std::mutex> lock(g_const_mutex);
        auto it = zeta_memo().find(key);
        if (it != zeta_memo().end()) return it->second;
    }
    PrecReal out(precision_bits);
    if (n >= 2) {
        mpfr_zeta_ui(out.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    } else if (n == 0) {
        out = PrecReal::of(-1L, precision_bits) / 2L;
    } else if ((-n) % 2 == 0) {
        mpfr_set_zero(out.raw(), 1);
    } else {
        // zeta(1-2r) = -B_{2r}/(2r) = (-1)^r * 2 * (2r-1)! * zeta(2r) / (2 pi)^{2r}
        const long r = (1 - n) / 2;
        const mpfr_prec_t wp = precision_bits + 32;
        PrecReal fact = PrecReal::of(1L, wp);
        for (long i = 2; i <= 2 * r - 1; ++i) fact = fact * i;
        PrecReal z2r(wp);
        mpfr_zeta_ui(z2r.raw(), static_cast<unsigned long>(2 * r), MPFR_RNDN);
        PrecReal val = fact * z2r * 2L / pow_si(pi_value(wp) * 2L, 2 * r);
        if (r % 2 == 1) val = -val;
        out = val.round_to(precision_bits);
    }
    std::lock_guard<std::mutex> lock(g_const_mutex);
    zeta_memo().emplace(key, out);
    return out;
}

}  // namespace plv
