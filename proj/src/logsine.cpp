#include "plv/logsine.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "plv/constants.hpp"

namespace plv {

namespace {

void check_orders(int j, int k) {
    if (j < 1 || k < 1) throw std::domain_error("log-sine orders must satisfy j, k >= 1");
    if (j + k > 6) throw std::domain_error("log-sine orders must satisfy j + k <= 6");
}

std::mutex g_cache_mutex;
std::map<std::string, QuadratureResult>& lsc_cache() {
    static std::map<std::string, QuadratureResult> cache;
    return cache;
}

std::string cache_key(char family, int j, int k, const PrecReal& arg, mpfr_prec_t prec) {
    char* hex = nullptr;
    mpfr_asprintf(&hex, "%Ra", arg.raw());
    std::string key;
    key += family;
    key += std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(prec) + "," + hex;
    mpfr_free_str(hex);
    return key;
}

QuadratureResult lsc_quadrature(int j, int k, const PrecReal& theta, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 64;
    const PrecReal pi_wp = pi_value(wp);
    const PrecReal gap = pi_wp - theta.round_to(wp);  // >= 0 here
    const Integrand f = [&, j, k](const PrecReal& t, const PrecReal& from_a, const PrecReal& from_b) {
        const mpfr_prec_t p = t.precision();
        PrecReal term = PrecReal::of(-1L, p);
        if (j > 1) {
            // singular only at t = 0; from_a == t
            term = term * pow_si(log(sin(from_a / 2L) * 2L), j - 1);
        }
        if (k > 1) {
            // 2 cos(t/2) = 2 sin((pi - t)/2); pi - t = gap + from_b exactly
            term = term * pow_si(log(sin((gap + from_b) / 2L) * 2L), k - 1);
        }
        return term;
    };
    PrecReal zero(wp);
    mpfr_set_zero(zero.raw(), 1);
    return tanh_sinh(f, zero, theta.round_to(wp), prec);
}

// Dense bivariate polynomial truncated at total degree <= deg, coefficients
// at working precision.
struct Poly2 {
    int deg;
    std::vector<PrecReal> c;  // (i, j) -> c[i * (deg + 1) + j]
    Poly2(int d, mpfr_prec_t wp) : deg(d), c((d + 1) * (d + 1), PrecReal(wp)) {
        for (auto& v : c) mpfr_set_zero(v.raw(), 1);
    }
    PrecReal& at(int i, int j) { return c[i * (deg + 1) + j]; }
    const PrecReal& at(int i, int j) const { return c[i * (deg + 1) + j]; }
};

Poly2 mul(const Poly2& a, const Poly2& b, mpfr_prec_t wp) {
    Poly2 r(a.deg, wp);
    for (int i = 0; i <= a.deg; ++i)
        for (int j = 0; i + j <= a.deg; ++j)
            for (int p = 0; i + p <= a.deg; ++p)
                for (int q = 0; i + j + p + q <= a.deg; ++q)
                    r.at(i + p, j + q) += a.at(i, j) * b.at(p, q);
    return r;
}

long binom_small(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

QuadratureResult lsc(int j, int k, const PrecReal& theta, mpfr_prec_t precision_bits) {
    check_orders(j, k);
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal th = theta.round_to(wp);
    const PrecReal pi_wp = pi_value(wp);
    if (th.sign() < 0 || th > pi_wp * 2L) throw std::domain_error("lsc: theta must lie in [0, 2pi]");
    if (th.is_zero()) {
        PrecReal zero(precision_bits);
        mpfr_set_zero(zero.raw(), 1);
        return QuadratureResult{zero, zero, 0};
    }

    const std::string key = cache_key('c', j, k, th, precision_bits);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = lsc_cache().find(key);
        if (it != lsc_cache().end()) return it->second;
    }

    QuadratureResult out;
    if (th <= pi_wp) {
        out = lsc_quadrature(j, k, th, precision_bits);
    } else {
        // Both log factors are symmetric about t = pi:
        // Lsc(theta) = 2 Lsc(pi) - Lsc(2pi - theta).
        QuadratureResult at_pi = lsc(j, k, pi_wp, precision_bits);
        QuadratureResult folded = lsc(j, k, pi_wp * 2L - th, precision_bits);
        out = QuadratureResult{at_pi.value * 2L - folded.value,
                               at_pi.error_estimate * 2L + folded.error_estimate,
                               std::max(at_pi.levels_used, folded.levels_used)};
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    lsc_cache().emplace(key, out);
    return out;
}

QuadratureResult lshch(int j, int k, const PrecReal& x, mpfr_prec_t precision_bits) {
    check_orders(j, k);
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal xw = x.round_to(wp);
    if (xw.sign() < 0) throw std::domain_error("lshch: x must be nonnegative");
    if (xw > 100L) throw std::domain_error("lshch: x is capped at 100");
    if (xw.is_zero()) {
        PrecReal zero(precision_bits);
        mpfr_set_zero(zero.raw(), 1);
        return QuadratureResult{zero, zero, 0};
    }

    const std::string key = cache_key('h', j, k, xw, precision_bits);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = lsc_cache().find(key);
        if (it != lsc_cache().end()) return it->second;
    }

    const Integrand f = [j, k](const PrecReal& t, const PrecReal& from_a, const PrecReal& /*from_b*/) {
        const mpfr_prec_t p = t.precision();
        PrecReal term = PrecReal::of(-1L, p);
        if (j > 1) term = term * pow_si(log(sinh(from_a / 2L) * 2L), j - 1);
        if (k > 1) term = term * pow_si(log(cosh(t / 2L) * 2L), k - 1);
        return term;
    };
    PrecReal zero(wp);
    mpfr_set_zero(zero.raw(), 1);
    QuadratureResult out = tanh_sinh(f, zero, xw, precision_bits);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    lsc_cache().emplace(key, out);
    return out;
}

PrecReal lsc_pi(int j, int k, mpfr_prec_t precision_bits) {
    check_orders(j, k);
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const int deg = j + k - 2;

    // log of the generating function divided by -pi:
    //   A = sum_{n=2..deg} (-1)^n zeta(n)/(n 2^n)
    //         [ (2^n - 2)(x^n + y^n) - sum_{0<i<n} C(n,i) x^i y^{n-i} ]
    Poly2 a(deg, wp);
    for (int n = 2; n <= deg; ++n) {
        PrecReal coeff = zeta_int(n, wp) / (static_cast<long>(n) * (1L << n));
        if (n % 2 == 1) coeff = -coeff;
        const long pure = (1L << n) - 2;
        a.at(n, 0) += coeff * pure;
        a.at(0, n) += coeff * pure;
        for (int i = 1; i < n; ++i) a.at(i, n - i) -= coeff * binom_small(n, i);
    }

    // exp(A) with A of minimal total degree 2.
    Poly2 expa(deg, wp);
    expa.at(0, 0) = PrecReal::of(1L, wp);
    Poly2 apow = a;
    long rfact = 1;
    for (int r = 1; 2 * r <= deg; ++r) {
        rfact *= r;
        for (int i = 0; i <= deg; ++i)
            for (int jj = 0; i + jj <= deg; ++jj) expa.at(i, jj) += apow.at(i, jj) / rfact;
        if (2 * (r + 1) <= deg) apow = mul(apow, a, wp);
    }

    long fact = 1;
    for (int i = 2; i <= j - 1; ++i) fact *= i;
    for (int i = 2; i <= k - 1; ++i) fact *= i;
    return (-pi_value(wp) * expa.at(j - 1, k - 1) * fact).round_to(precision_bits);
}

PrecReal lsc_reflect(int j, int k, const PrecReal& theta, mpfr_prec_t precision_bits) {
    check_orders(j, k);
    if (j + k > 5) throw std::domain_error("lsc_reflect: j + k <= 5 required");
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal th = theta.round_to(wp);
    const PrecReal pi_wp = pi_value(wp);
    if (th.sign() < 0 || th > pi_wp) throw std::domain_error("lsc_reflect: theta must lie in [0, pi]");
    return (lsc_pi(j, k, precision_bits) - lsc(k, j, pi_wp - th, precision_bits).value)
        .round_to(precision_bits);
}

}  // namespace plv
