#include "plv/svpolylog.hpp"

#include <stdexcept>

#include "plv/constants.hpp"
#include "plv/polylog.hpp"

namespace plv {

namespace {

void check_order(int m) {
    if (m < 2 || m > 4) throw std::domain_error("single-valued order must be in 2..4");
}

long factorial_small(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

PrecReal zero_at(mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_set_zero(r.raw(), 1);
    return r;
}

// Shared disk evaluation: sum_{j=1}^{m} (-log|x|)^{m-j}/(m-j)! Li_j(x),
// plus the log^{m-1}|x| log|1-x| / m! correction when with_correction.
PrecReal disk_formula(int m, const PrecComplex& x, mpfr_prec_t wp, bool with_correction) {
    const PrecReal neg_log_ax = -log(abs(x));
    PrecComplex acc(wp);
    for (int j = 1; j <= m; ++j) {
        PrecReal coeff = pow_si(neg_log_ax, m - j) / factorial_small(m - j);
        acc += li(j, x, wp) * coeff;
    }
    PrecReal out = parity_projection(m, acc);
    if (with_correction) {
        PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
        PrecReal corr = pow_si(-neg_log_ax, m - 1) * log(abs(one - x)) / factorial_small(m);
        if (m % 2 == 1) out += corr;  // R_m of a real value vanishes for even m
    }
    return out;
}

}  // namespace

PrecReal parity_projection(int m, const PrecComplex& w) {
    return (m % 2 == 0) ? w.imag() : w.real();
}

PrecReal d_classic(int m, const PrecComplex& x, mpfr_prec_t precision_bits) {
    check_order(m);
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecComplex xw = x.round_to(wp);
    if (xw.is_zero() || xw.is_one()) throw std::domain_error("d_classic: x in {0, 1}");
    const PrecReal ax = abs(xw);
    if (ax > PrecReal::of(1L, wp) + PrecReal::two_pow(-static_cast<long>(precision_bits) / 2, wp)) {
        throw std::domain_error("d_classic: defined only on the closed unit disk");
    }
    // The j = 0 convention term R_m((-log|x|)^m/m! * (-1/2)).
    PrecReal out = disk_formula(m, xw, wp, false);
    if (m % 2 == 1) {
        out += pow_si(-log(ax), m) / (-2 * factorial_small(m));
    }
    return out.round_to(precision_bits);
}

PrecReal d_tilde(int m, const PrecComplex& x, mpfr_prec_t precision_bits) {
    check_order(m);
    PrecReal::check_precision(precision_bits);
    mpfr_prec_t wp = precision_bits + 64;
    PrecComplex xw = x.round_to(wp);

    if (xw.is_zero()) return zero_at(precision_bits);
    if (xw.is_real() && m % 2 == 0) return zero_at(precision_bits);  // conjugation relation
    if (xw.is_one()) {
        return (m % 2 == 1) ? zeta_int(m, precision_bits) : zero_at(precision_bits);
    }

    const PrecReal one = PrecReal::of(1L, wp);
    if (abs(xw) > one) {
        const PrecComplex inv = PrecComplex(one) / xw;
        PrecReal val = d_tilde(m, inv, precision_bits);
        return (m % 2 == 0) ? -val : val;
    }

    const PrecReal snap = PrecReal::two_pow(-static_cast<long>(precision_bits) / 2, wp);
    if (abs(xw) < snap) return zero_at(precision_bits);  // continuous limit at 0
    if (abs(xw - PrecComplex(one)) < snap) {
        // log^{m-1}|x| log|1-x| is a vanishing product here; evaluate the
        // formula directly with a doubled working precision.
        wp = 2 * wp;
        xw = x.round_to(wp);
    }
    return disk_formula(m, xw, wp, true).round_to(precision_bits);
}

PrecReal d_tilde(int m, const PrecReal& x, mpfr_prec_t precision_bits) {
    return d_tilde(m, PrecComplex(x), precision_bits);
}

PrecReal check_distribution(int m, int n_parts, const PrecComplex& x, mpfr_prec_t precision_bits) {
    check_order(m);
    if (n_parts != 2 && n_parts != 3 && n_parts != 4 && n_parts != 6) {
        throw std::domain_error("check_distribution: N must be one of {2, 3, 4, 6}");
    }
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecComplex xw = x.round_to(wp);
    const PrecComplex xn = pow_si(xw, n_parts);
    if (xn.is_zero() || xn.is_one()) throw std::domain_error("check_distribution: x^N in {0, 1}");

    PrecReal lhs = d_tilde(m, xn, wp);
    PrecReal sum(wp);
    mpfr_set_zero(sum.raw(), 1);
    const PrecReal two_pi = pi_value(wp) * 2L;
    for (int j = 0; j < n_parts; ++j) {
        const PrecComplex rot = unit_circle(two_pi * j / n_parts);
        const PrecComplex arg = xw * rot;
        if (arg.is_one()) throw std::domain_error("check_distribution: rotated point hits 1");
        sum += d_tilde(m, arg, wp);
    }
    long scale = 1;
    for (int i = 0; i < m - 1; ++i) scale *= n_parts;
    return abs(lhs - sum * scale).round_to(precision_bits);
}

}  // namespace plv
