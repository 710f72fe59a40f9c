#include "plv/identities.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "plv/constants.hpp"
#include "plv/logsine.hpp"
#include "plv/polylog.hpp"
#include "plv/series.hpp"
#include "plv/svpolylog.hpp"
#include "plv/symtensor.hpp"

namespace plv {

SpecialPoints::SpecialPoints(mpfr_prec_t precision_bits)
    : prec(precision_bits + 64),
      r(prec),
      phi(prec),
      sqrt3(sqrt(PrecReal::of(3L, prec))),
      sqrt5(sqrt(PrecReal::of(5L, prec))) {
    const PrecReal s6 = sqrt(PrecReal::of(6L, prec));
    const PrecReal s2 = sqrt(PrecReal::of(2L, prec));
    r = (s6 - s2) / 2L;
    phi = (sqrt5 + 1L) / 2L;
}

PrecComplex SpecialPoints::half_power(int k) const {
    return unit_circle(pi_value(prec) * static_cast<long>(k) / 12L);
}

namespace {

PrecReal zero_at(mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_set_zero(r.raw(), 1);
    return r;
}

void check_open_zero_pi(const PrecReal& theta, mpfr_prec_t wp, const char* who) {
    if (!(theta > 0L) || !(theta < pi_value(wp))) {
        throw std::domain_error(std::string(who) + ": theta must lie in (0, pi)");
    }
}

}  // namespace

PrecReal ls4_closed(const PrecReal& theta, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal th = theta.round_to(wp);
    check_open_zero_pi(th, wp, "ls4_closed");
    const PrecComplex e = unit_circle(th);
    const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    const PrecReal z3 = zeta_int(3, wp);
    PrecReal val = z3 * th * 3L / 2L +
                   (-d_tilde(4, e, wp) - d_tilde(4, one - e, wp) * 4L) * 3L / 2L;
    return val.round_to(precision_bits);
}

PrecReal lsc32_closed(const PrecReal& theta, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal th = theta.round_to(wp);
    check_open_zero_pi(th, wp, "lsc32_closed");
    const PrecComplex e = unit_circle(th);
    const PrecComplex e2 = unit_circle(th * 2L);
    const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    const PrecReal z3 = zeta_int(3, wp);
    PrecReal val = -z3 / 4L * th
                   - d_tilde(4, -e, wp) / 2L
                   - d_tilde(4, e, wp)
                   + d_tilde(4, one + e, wp) * 2L
                   + d_tilde(4, (one - e) / (one + e), wp) * 2L
                   - d_tilde(4, one - e2, wp) / 2L;
    return val.round_to(precision_bits);
}

PrecReal lsh_closed(HypClosedForm which, const PrecReal& x, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal xw = x.round_to(wp);
    if (!(xw > 0L)) throw std::domain_error("lsh_closed: x must be positive");
    const PrecReal emx = exp(-xw);
    const PrecReal one = PrecReal::of(1L, wp);
    const PrecReal z3 = zeta_int(3, wp);
    PrecReal val(wp);
    switch (which) {
        case HypClosedForm::Lsh3:
            val = -d_tilde(3, emx, wp) - d_tilde(3, one - emx, wp) * 2L
                  - xw * pow_si(log(sinh(xw / 2L) * 2L), 2) / 3L + z3;
            break;
        case HypClosedForm::Lshch13:
            val = -d_tilde(3, -emx, wp) - d_tilde(3, one / (one + emx), wp) * 2L
                  - xw * pow_si(log(cosh(xw / 2L) * 2L), 2) / 3L + z3;
            break;
        case HypClosedForm::Lshch22: {
            const PrecReal em2x = exp(xw * (-2L));
            val = -d_tilde(3, em2x, wp) / 8L - d_tilde(3, one - em2x, wp) / 2L
                  + d_tilde(3, one - emx, wp) + d_tilde(3, one / (one + emx), wp)
                  - xw * log(sinh(xw / 2L) * 2L) * log(cosh(xw / 2L) * 2L) / 3L
                  - z3 * 3L / 4L;
            break;
        }
    }
    return val.round_to(precision_bits);
}

PrecReal psi3(const PrecComplex& t, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecComplex tw = t.round_to(wp);
    if (tw.is_zero() || tw.is_one()) throw std::domain_error("psi3: t must avoid {0, 1}");
    const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    return (d_tilde(3, one - tw, wp) - d_tilde(3, one - one / tw, wp)).round_to(precision_bits);
}

// ------------------------------------------------- derivative along paths --

namespace {

struct PathData {
    PrecComplex w;       // f(e^{i theta})
    PrecComplex deriv;   // e^{i theta} f'(e^{i theta})
};

PathData eval_path(CirclePath path, const PrecComplex& e, mpfr_prec_t wp) {
    const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    switch (path) {
        case CirclePath::Exp:
            return {e, e};
        case CirclePath::NegExp:
            return {-e, -e};
        case CirclePath::OneMinusExp:
            return {one - e, -e};
        case CirclePath::OnePlusExp:
            return {one + e, e};
        case CirclePath::Cayley: {
            const PrecComplex den = one + e;
            // f = (1-x)/(1+x), f' = -2/(1+x)^2
            return {(one - e) / den, -(e * 2L) / (den * den)};
        }
        case CirclePath::OneMinusExp2:
            // f = 1 - x^2, x f'(x) = -2 x^2
            return {one - e * e, -(e * e) * 2L};
    }
    throw std::logic_error("unreachable path");
}

PrecComplex path_point(CirclePath path, const PrecReal& theta, mpfr_prec_t wp) {
    return eval_path(path, unit_circle(theta.round_to(wp)), wp).w;
}

}  // namespace

PrecReal derivative_rhs(CirclePath path, int m, const PrecReal& theta0, mpfr_prec_t precision_bits) {
    if (m != 3 && m != 4) throw std::domain_error("derivative_rhs: m must be 3 or 4");
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal th = theta0.round_to(wp);
    check_open_zero_pi(th, wp, "derivative_rhs");
    const PrecComplex e = unit_circle(th);
    const PathData pd = eval_path(path, e, wp);
    if (pd.w.is_zero()) throw std::domain_error("derivative_rhs: path hits 0");
    const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    const PrecComplex one_minus_w = one - pd.w;
    if (one_minus_w.is_zero()) throw std::domain_error("derivative_rhs: path hits 1");

    // g_f(theta) = i e^{i th} f' / (2 f),  h_f(theta) = i e^{i th} f' / (1 - f);
    // with real rational f, u := e^{i th} f'/(2 f) and v := e^{i th} f'/(1-f)
    // give g(th)+g(-th) = 2i Re u, g(th)-g(-th) = -2 Im u, and likewise for v.
    const PrecComplex u = pd.deriv / (pd.w * 2L);
    const PrecComplex v = pd.deriv / one_minus_w;

    const PrecReal log_aw = log(abs(pd.w));
    const PrecReal log_a1w = log(abs(one_minus_w));
    long mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    const long m1fact = mfact / m;

    // (-1)^m [ Dt_{m-1}(w) - R_{m-1}( log^{m-2}|w| log|1-w| / (m-1)! ) ] * 2 Re u
    PrecReal correction = zero_at(wp);
    if ((m - 1) % 2 == 1) {  // R_{m-1} keeps real values only for odd m-1
        correction = pow_si(log_aw, m - 2) * log_a1w / m1fact;
    }
    PrecReal total = (d_tilde(m - 1, pd.w, wp) - correction) * (u.real() * 2L);
    if (m % 2 == 1) total = -total;

    if (m % 2 == 0) {
        // (-log|w|)^{m-1} / (2i (m-1)!) * (h(th) + h(-th)) = .. * Re v
        total += pow_si(-log_aw, m - 1) * v.real() / m1fact;
    } else {
        // sigma_m = 2: (-log|w|)^{m-1}/(2 (m-1)!) * (h(th) - h(-th)) = .. * (- Im v)
        total += pow_si(-log_aw, m - 1) * (-v.imag()) / (2 * m1fact);
        // delta_m log^{m-1}|w| / (2 m!) * (h(-th) - h(th)) = .. * 2 Im v
        total += pow_si(log_aw, m - 1) * v.imag() / mfact;
        // delta_m (m-1) log^{m-2}|w| log|1-w| / m! * (g(th) - g(-th)) = .. * (-2 Im u)
        total += pow_si(log_aw, m - 2) * log_a1w * (m - 1) * (-u.imag() * 2L) / (2 * mfact);
    }
    return total.round_to(precision_bits);
}

PrecReal derivative_residual(CirclePath path, int m, const PrecReal& theta0,
                             mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal th = theta0.round_to(wp);
    const PrecReal h = PrecReal::two_pow(-40, wp);
    const PrecComplex x_plus = path_point(path, th + h, wp);
    const PrecComplex x_minus = path_point(path, th - h, wp);
    const PrecReal numeric = (d_tilde(m, x_plus, wp) - d_tilde(m, x_minus, wp)) / (h * 2L);
    const PrecReal analytic = derivative_rhs(path, m, th, wp);
    return abs(numeric - analytic).round_to(precision_bits);
}

// ----------------------------------------------------------------- registry --

namespace {

using Residual = std::function<PrecReal(mpfr_prec_t)>;

std::vector<IdentityCheck> build_registry() {
    std::vector<IdentityCheck> reg;
    const auto add = [&reg](std::string id, std::string ref, int tol, mpfr_prec_t min_bits,
                            Residual fn) {
        reg.push_back(IdentityCheck{std::move(id), std::move(ref), tol, min_bits, std::move(fn)});
    };

    // --- conjectures ---------------------------------------------------
    add("conj2",
        "sum binom(2n,n)(9H(2n+1)+32/(2n+1))/((2n+1)^3 16^n) = 40 beta(4) + (5/12) pi zeta(3)",
        -50, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj2Lhs, wp, 60).first;
            const PrecReal rhs = constant(ConstantName::Beta4, wp) * 40L +
                                 pi_value(wp) * zeta_int(3, wp) * 5L / 12L;
            return abs(lhs - rhs);
        });
    add("conj1",
        "sum binom(2n,n)(5H(2n+1)+12/(2n+1))/((2n+1)^2 (-16)^n) = 14 zeta(3)",
        -50, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj1Lhs, wp, 60).first;
            return abs(lhs - zeta_int(3, wp) * 14L);
        });

    // --- series <-> integral instances ----------------------------------
    add("eqn-4-1", "sum binom(2n,n)/((2n+1)^4 16^n) = (1/6) Ls_4(pi/3)", -30, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj2A, wp, 60).first;
            return abs(lhs - lsc(4, 1, pi_value(wp) / 3L, wp).value / 6L);
        });
    add("eqn-4-2",
        "sum binom H2n/((2n+1)^3 16^n) = Lsc32(pi/3) - 2 Lsc32(pi/6) - 4 Lsc23(pi/6) - 2 Lsc14(pi/6)",
        -30, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj2B, wp, 60).first;
            const PrecReal pi6 = pi_value(wp) / 6L;
            const PrecReal rhs = lsc(3, 2, pi6 * 2L, wp).value - lsc(3, 2, pi6, wp).value * 2L -
                                 lsc(2, 3, pi6, wp).value * 4L - lsc(1, 4, pi6, wp).value * 2L;
            return abs(lhs - rhs);
        });
    add("eqn-4-3",
        "sum binom H2n/((2n+1)^3 16^n) = 2 Ls4(5pi/6) + Lsc32(pi/3) - 2 Lsc32(pi/6) + 4 Lsc32(5pi/6)"
        " - 2 pi zeta(3)",
        -30, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj2B, wp, 60).first;
            const PrecReal pi6 = pi_value(wp) / 6L;
            const PrecReal rhs = lsc(4, 1, pi6 * 5L, wp).value * 2L + lsc(3, 2, pi6 * 2L, wp).value -
                                 lsc(3, 2, pi6, wp).value * 2L + lsc(3, 2, pi6 * 5L, wp).value * 4L -
                                 pi_value(wp) * zeta_int(3, wp) * 2L;
            return abs(lhs - rhs);
        });
    add("eqn-5-1", "sum binom(2n,n)/((2n+1)^3 (-16)^n) = -(1/2) Lsh_3(2 log phi)", -30, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj1A, wp, 60).first;
            const PrecReal lphi = constant(ConstantName::LogPhi, wp);
            return abs(lhs + lshch(3, 1, lphi * 2L, wp).value / 2L);
        });
    add("eqn-5-2",
        "sum binom H2n/((2n+1)^2 (-16)^n) = -2 Lshch22(2 log phi) + 4 Lshch13(log phi)"
        " + 4 Lshch22(log phi)",
        -30, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal lhs = apery_sum(SeriesVariant::Conj1B, wp, 60).first;
            const PrecReal lphi = constant(ConstantName::LogPhi, wp);
            const PrecReal rhs = -lshch(2, 2, lphi * 2L, wp).value * 2L +
                                 lshch(1, 3, lphi, wp).value * 4L + lshch(2, 2, lphi, wp).value * 4L;
            return abs(lhs - rhs);
        });

    // --- Lewin pi-values and reflection ---------------------------------
    add("eqn-Lsc14", "Lsc_{1,4}(th) = -Ls_4(pi-th) + Ls_4(pi), Ls_4(pi) = (3/2) pi zeta(3)", -25,
        192, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal constant_part =
                abs(lsc_pi(4, 1, wp) - pi_value(wp) * zeta_int(3, wp) * 3L / 2L);
            const PrecReal th = pi_value(wp) / 6L;
            const PrecReal reflect = abs(lsc(1, 4, th, wp).value - lsc_reflect(1, 4, th, wp));
            return max(constant_part, reflect);
        });
    add("eqn-Lsc23", "Lsc_{2,3}(th) = -Lsc_{3,2}(pi-th) + Lsc_{3,2}(pi) = .. - (1/4) pi zeta(3)",
        -25, 192, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal constant_part =
                abs(lsc_pi(3, 2, wp) + pi_value(wp) * zeta_int(3, wp) / 4L);
            const PrecReal th = pi_value(wp) / 6L;
            const PrecReal reflect = abs(lsc(2, 3, th, wp).value - lsc_reflect(2, 3, th, wp));
            return max(constant_part, reflect);
        });

    // --- Step 5: twelfth roots of unity ----------------------------------
    add("eqn-Ls4-Pi3", "Ls_4(pi/3) = (1/2) pi zeta(3) + (9/2) Dt_4(rho^2)", -40, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal rhs = pi_value(wp) * zeta_int(3, wp) / 2L +
                                 d_tilde(4, sp.rho_power(2), wp) * 9L / 2L;
            return abs(lsc(4, 1, pi_value(wp) / 3L, wp).value - rhs);
        });
    add("eqn-Lsc32-Pi3", "Lsc_{3,2}(pi/3) = -(1/12) pi zeta(3) - (7/6) Dt_4(rho^2)", -40, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal rhs = -pi_value(wp) * zeta_int(3, wp) / 12L -
                                 d_tilde(4, sp.rho_power(2), wp) * 7L / 6L;
            return abs(lsc(3, 2, pi_value(wp) / 3L, wp).value - rhs);
        });
    add("eqn-Ls4-5Pi6", "Ls_4(5pi/6) = (5/4) pi zeta(3) - (3/2) Dt_4(rho^5) + 6 Dt_4(r rho^(1/2))",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal rhs = pi_value(wp) * zeta_int(3, wp) * 5L / 4L -
                                 d_tilde(4, sp.rho_power(5), wp) * 3L / 2L +
                                 d_tilde(4, sp.half_power(1) * sp.r, wp) * 6L;
            return abs(lsc(4, 1, pi_value(wp) * 5L / 6L, wp).value - rhs);
        });
    add("eqn-Lsc32-Pi6",
        "Lsc_{3,2}(pi/6) = -(1/24) pi zeta(3) - Dt_4(rho) + (1/2) Dt_4(rho^2) + (1/2) Dt_4(rho^5)"
        " + 2 Dt_4(r rho^(1/2)) - 2 Dt_4(r^2 rho^3)",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal rhs = -pi_value(wp) * zeta_int(3, wp) / 24L -
                                 d_tilde(4, sp.rho_power(1), wp) +
                                 d_tilde(4, sp.rho_power(2), wp) / 2L +
                                 d_tilde(4, sp.rho_power(5), wp) / 2L +
                                 d_tilde(4, sp.half_power(1) * sp.r, wp) * 2L -
                                 d_tilde(4, sp.rho_power(3) * (sp.r * sp.r), wp) * 2L;
            return abs(lsc(3, 2, pi_value(wp) / 6L, wp).value - rhs);
        });
    add("eqn-Lsc32-5Pi6",
        "Lsc_{3,2}(5pi/6) = -(5/24) pi zeta(3) + (1/2) Dt_4(rho) - (1/2) Dt_4(rho^2) - Dt_4(rho^5)"
        " + 2 Dt_4(r rho^(5/2)) - 2 Dt_4(r^2 rho^3)",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal rhs = -pi_value(wp) * zeta_int(3, wp) * 5L / 24L +
                                 d_tilde(4, sp.rho_power(1), wp) / 2L -
                                 d_tilde(4, sp.rho_power(2), wp) / 2L -
                                 d_tilde(4, sp.rho_power(5), wp) +
                                 d_tilde(4, sp.half_power(5) * sp.r, wp) * 2L -
                                 d_tilde(4, sp.rho_power(3) * (sp.r * sp.r), wp) * 2L;
            return abs(lsc(3, 2, pi_value(wp) * 5L / 6L, wp).value - rhs);
        });

    // Numeric specializations of the Kummer functional equation.
    add("F24", "-9 Dt_4(rho^2) + 6 Dt_4(rho^4) - 15 Dt_4(rho/sqrt3) + 12 Dt_4(rho^3/sqrt3) = 0",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            PrecReal acc = d_tilde(4, sp.rho_power(2), wp) * (-9L) +
                           d_tilde(4, sp.rho_power(4), wp) * 6L +
                           d_tilde(4, sp.rho_power(1) / PrecComplex(sp.sqrt3), wp) * (-15L) +
                           d_tilde(4, sp.rho_power(3) / PrecComplex(sp.sqrt3), wp) * 12L;
            return abs(acc);
        });
    add("F21",
        "5 Dt_4(rho) - 3 Dt_4(rho^3) + 3 Dt_4(r rho^(1/2)) - Dt_4(r rho^(3/2))"
        " - 2 Dt_4(r rho^(5/2)) + 3 Dt_4(r rho^(9/2)) = 0",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            PrecReal acc = d_tilde(4, sp.rho_power(1), wp) * 5L -
                           d_tilde(4, sp.rho_power(3), wp) * 3L +
                           d_tilde(4, sp.half_power(1) * sp.r, wp) * 3L -
                           d_tilde(4, sp.half_power(3) * sp.r, wp) -
                           d_tilde(4, sp.half_power(5) * sp.r, wp) * 2L +
                           d_tilde(4, sp.half_power(9) * sp.r, wp) * 3L;
            return abs(acc);
        });
    add("F25",
        "-3 Dt_4(rho^3) + 5 Dt_4(rho^5) - 2 Dt_4(r rho^(1/2)) - 3 Dt_4(r rho^(3/2))"
        " + 3 Dt_4(r rho^(5/2)) + Dt_4(r rho^(9/2)) = 0",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            PrecReal acc = d_tilde(4, sp.rho_power(3), wp) * (-3L) +
                           d_tilde(4, sp.rho_power(5), wp) * 5L -
                           d_tilde(4, sp.half_power(1) * sp.r, wp) * 2L -
                           d_tilde(4, sp.half_power(3) * sp.r, wp) * 3L +
                           d_tilde(4, sp.half_power(5) * sp.r, wp) * 3L +
                           d_tilde(4, sp.half_power(9) * sp.r, wp);
            return abs(acc);
        });
    add("D4-rho4", "Dt_4(rho^4) = (8/9) Dt_4(rho^2)", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        SpecialPoints sp(p);
        return abs(d_tilde(4, sp.rho_power(4), wp) -
                   d_tilde(4, sp.rho_power(2), wp) * 8L / 9L);
    });
    add("TBP-0",
        "Dt_4(rho) - (3/16) Dt_4(rho^2) - (10/9) Dt_4(rho^3) - 2 Dt_4(rho^5)"
        " + 2 Dt_4(r rho^(1/2)) + 2 Dt_4(r rho^(5/2)) - Dt_4(r^2 rho^3) = 0",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            PrecReal acc = d_tilde(4, sp.rho_power(1), wp) -
                           d_tilde(4, sp.rho_power(2), wp) * 3L / 16L -
                           d_tilde(4, sp.rho_power(3), wp) * 10L / 9L -
                           d_tilde(4, sp.rho_power(5), wp) * 2L +
                           d_tilde(4, sp.half_power(1) * sp.r, wp) * 2L +
                           d_tilde(4, sp.half_power(5) * sp.r, wp) * 2L -
                           d_tilde(4, sp.rho_power(3) * (sp.r * sp.r), wp);
            return abs(acc);
        });
    add("TBP-1",
        "2 Dt_4(r rho^(1/2)) - 8 Dt_4(r rho^(3/2)) + 2 Dt_4(r rho^(5/2)) + 8 Dt_4(r rho^(9/2))"
        " = -Dt_4(rho) + (3/16) Dt_4(rho^2) + (10/9) Dt_4(rho^3) + 2 Dt_4(rho^5)",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            PrecReal lhs = d_tilde(4, sp.half_power(1) * sp.r, wp) * 2L -
                           d_tilde(4, sp.half_power(3) * sp.r, wp) * 8L +
                           d_tilde(4, sp.half_power(5) * sp.r, wp) * 2L +
                           d_tilde(4, sp.half_power(9) * sp.r, wp) * 8L;
            PrecReal rhs = -d_tilde(4, sp.rho_power(1), wp) +
                           d_tilde(4, sp.rho_power(2), wp) * 3L / 16L +
                           d_tilde(4, sp.rho_power(3), wp) * 10L / 9L +
                           d_tilde(4, sp.rho_power(5), wp) * 2L;
            return abs(lhs - rhs);
        });
    add("TBP-2",
        "-9 Dt_4(rho) - (3/16) Dt_4(rho^2) + (98/9) Dt_4(rho^3) - 12 Dt_4(rho^5) = 0", -40, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            PrecReal acc = d_tilde(4, sp.rho_power(1), wp) * (-9L) -
                           d_tilde(4, sp.rho_power(2), wp) * 3L / 16L +
                           d_tilde(4, sp.rho_power(3), wp) * 98L / 9L -
                           d_tilde(4, sp.rho_power(5), wp) * 12L;
            return abs(acc);
        });
    add("rho2", "Dt_4(rho^2) = 8 Dt_4(rho) - 8 Dt_4(rho^5)", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        SpecialPoints sp(p);
        return abs(d_tilde(4, sp.rho_power(2), wp) - d_tilde(4, sp.rho_power(1), wp) * 8L +
                   d_tilde(4, sp.rho_power(5), wp) * 8L);
    });
    add("rho3", "Dt_4(rho^3) = (27/28)(Dt_4(rho) + Dt_4(rho^5))", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        SpecialPoints sp(p);
        return abs(d_tilde(4, sp.rho_power(3), wp) -
                   (d_tilde(4, sp.rho_power(1), wp) + d_tilde(4, sp.rho_power(5), wp)) * 27L / 28L);
    });
    add("borwein-straub-cl4", "Ls_4(pi/3) = (1/2) pi zeta(3) + (9/2) Cl_4(pi/3)", -40, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal pi3 = pi_value(wp) / 3L;
            const PrecReal cl4 = li(4, unit_circle(pi3), wp).imag();
            const PrecReal rhs = pi_value(wp) * zeta_int(3, wp) / 2L + cl4 * 9L / 2L;
            return abs(lsc(4, 1, pi3, wp).value - rhs);
        });

    // --- Lemma 5.1 (single deterministic samples; the test suites sweep
    //     more points) -------------------------------------------------------
    add("lemma-5-1-lsh3", "Lsh_3(x) = -Dt_3(e^-x) - 2 Dt_3(1-e^-x) - (x/3) log^2(2 sinh(x/2)) + zeta(3)",
        -30, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal x = PrecReal::of(1L, wp);
            return abs(lshch(3, 1, x, wp).value - lsh_closed(HypClosedForm::Lsh3, x, wp));
        });
    add("lemma-5-1-lshch13", "Lshch_{1,3}(x) via Dt_3 closed form", -30, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        const PrecReal x = PrecReal::of(1L, wp);
        return abs(lshch(1, 3, x, wp).value - lsh_closed(HypClosedForm::Lshch13, x, wp));
    });
    add("lemma-5-1-lshch22", "Lshch_{2,2}(x) via Dt_3 closed form", -30, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        const PrecReal x = PrecReal::of(1L, wp);
        return abs(lshch(2, 2, x, wp).value - lsh_closed(HypClosedForm::Lshch22, x, wp));
    });

    // --- psi-form restatements -------------------------------------------
    add("remark-psi-31", "Lsh_3(x) + (x/3) log^2(2 sinh(x/2)) = psi(e^x)", -30, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal x = PrecReal::of(1L, wp);
            const PrecReal lhs = lshch(3, 1, x, wp).value + x * pow_si(log(sinh(x / 2L) * 2L), 2) / 3L;
            return abs(lhs - psi3(PrecComplex(exp(x)), wp));
        });
    add("remark-psi-22",
        "Lshch_{2,2}(x) + (x/3) log(2 sinh(x/2)) log(2 cosh(x/2)) = (1/4)(psi(e^(2x)) - 2 psi(e^x)"
        " - 2 psi(e^-x))",
        -30, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal x = PrecReal::of(1L, wp);
            const PrecReal lhs = lshch(2, 2, x, wp).value +
                                 x * log(sinh(x / 2L) * 2L) * log(cosh(x / 2L) * 2L) / 3L;
            const PrecReal rhs = (psi3(PrecComplex(exp(x * 2L)), wp) -
                                  psi3(PrecComplex(exp(x)), wp) * 2L -
                                  psi3(PrecComplex(exp(-x)), wp) * 2L) / 4L;
            return abs(lhs - rhs);
        });
    add("remark-psi-13", "Lshch_{1,3}(x) + (x/3) log^2(2 cosh(x/2)) = psi(-e^x)", -30, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            const PrecReal x = PrecReal::of(1L, wp);
            const PrecReal lhs = lshch(1, 3, x, wp).value + x * pow_si(log(cosh(x / 2L) * 2L), 2) / 3L;
            return abs(lhs - psi3(PrecComplex(-exp(x)), wp));
        });

    // --- golden-ratio outputs ----------------------------------------------
    add("phi-out-1", "Lsh_3(2 log phi) = -2 Dt_3(1/phi) + (1/5) zeta(3)", -40, 256,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal lphi = log(sp.phi);
            const PrecReal rhs = d_tilde(3, PrecReal::of(1L, wp) / sp.phi, wp) * (-2L) +
                                 zeta_int(3, wp) / 5L;
            return abs(lshch(3, 1, lphi * 2L, wp).value - rhs);
        });
    add("phi-out-2",
        "Lshch_{2,2}(2 log phi) = -(1/8) Dt_3(phi^-4) - (1/2) Dt_3(sqrt5 phi^-2) + Dt_3(1/phi)"
        " + Dt_3(phi/sqrt5) - (3/4) zeta(3)",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal lphi = log(sp.phi);
            const PrecReal inv = PrecReal::of(1L, wp) / sp.phi;
            const PrecReal rhs = d_tilde(3, pow_si(inv, 4), wp) / (-8L) -
                                 d_tilde(3, sp.sqrt5 * inv * inv, wp) / 2L +
                                 d_tilde(3, inv, wp) + d_tilde(3, sp.phi / sp.sqrt5, wp) -
                                 zeta_int(3, wp) * 3L / 4L;
            return abs(lshch(2, 2, lphi * 2L, wp).value - rhs);
        });
    add("phi-out-3", "Lshch_{1,3}(log phi) = -Dt_3(1/phi) - (3/4) log^3 phi + (4/5) zeta(3)", -40,
        256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal lphi = log(sp.phi);
            const PrecReal rhs = -d_tilde(3, PrecReal::of(1L, wp) / sp.phi, wp) -
                                 pow_si(lphi, 3) * 3L / 4L + zeta_int(3, wp) * 4L / 5L;
            return abs(lshch(1, 3, lphi, wp).value - rhs);
        });
    add("phi-out-4", "Lshch_{2,2}(log phi) = (1/2) Dt_3(1/phi) + (3/4) log^3 phi - (1/20) zeta(3)",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal lphi = log(sp.phi);
            const PrecReal rhs = d_tilde(3, PrecReal::of(1L, wp) / sp.phi, wp) / 2L +
                                 pow_si(lphi, 3) * 3L / 4L - zeta_int(3, wp) / 20L;
            return abs(lshch(2, 2, lphi, wp).value - rhs);
        });
    add("d3-id-step2",
        "(5/4) Dt_3(phi^-4) + 5 Dt_3(sqrt5 phi^-2) - 3 Dt_3(1/phi) - 10 Dt_3(phi/sqrt5)"
        " + (34/5) zeta(3) = 0",
        -40, 256, [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            SpecialPoints sp(p);
            const PrecReal inv = PrecReal::of(1L, wp) / sp.phi;
            PrecReal acc = d_tilde(3, pow_si(inv, 4), wp) * 5L / 4L +
                           d_tilde(3, sp.sqrt5 * inv * inv, wp) * 5L -
                           d_tilde(3, inv, wp) * 3L - d_tilde(3, sp.phi / sp.sqrt5, wp) * 10L +
                           zeta_int(3, wp) * 34L / 5L;
            return abs(acc);
        });

    // --- special values -----------------------------------------------------
    add("tD3-neg1", "Dt_3(-1) = -(3/4) zeta(3)", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        return abs(d_tilde(3, PrecReal::of(-1L, wp), wp) + zeta_int(3, wp) * 3L / 4L);
    });
    add("tD3-half", "Dt_3(1/2) = (7/8) zeta(3)", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        return abs(d_tilde(3, PrecReal::of(1L, wp) / 2L, wp) - zeta_int(3, wp) * 7L / 8L);
    });
    add("tD3-phi2", "Dt_3(phi^-2) = (4/5) zeta(3)", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        SpecialPoints sp(p);
        const PrecReal inv = PrecReal::of(1L, wp) / sp.phi;
        return abs(d_tilde(3, inv * inv, wp) - zeta_int(3, wp) * 4L / 5L);
    });
    add("lewin-49-4", "Dt_3(-1/8) - 18 Dt_3(-1/2) = (49/4) zeta(3)", -40, 256, [](mpfr_prec_t p) {
        const mpfr_prec_t wp = p + 64;
        return abs(d_tilde(3, PrecReal::of(-1L, wp) / 8L, wp) -
                   d_tilde(3, PrecReal::of(-1L, wp) / 2L, wp) * 18L - zeta_int(3, wp) * 49L / 4L);
    });
    add("completeD2", "D_2(e^(i th)) + D_2(1 - e^(i th)) = 0 on (0, pi)", -35, 192,
        [](mpfr_prec_t p) {
            const mpfr_prec_t wp = p + 64;
            PrecReal worst = zero_at(wp);
            const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
            for (int i = 1; i <= 20; ++i) {
                const PrecReal th = pi_value(wp) * i / 21L;
                const PrecComplex e = unit_circle(th);
                worst = max(worst, abs(d_classic(2, e, wp) + d_classic(2, one - e, wp)));
            }
            return worst;
        });

    return reg;
}

}  // namespace

const std::vector<IdentityCheck>& identity_registry() {
    static const std::vector<IdentityCheck> reg = build_registry();
    return reg;
}

CheckReport identity_residual(const std::string& id, mpfr_prec_t precision_bits) {
    CheckReport report;
    report.id = id;
    report.precision_bits = precision_bits;
    const auto start = std::chrono::steady_clock::now();
    const IdentityCheck* found = nullptr;
    for (const auto& check : identity_registry()) {
        if (check.id == id) {
            found = &check;
            break;
        }
    }
    if (found == nullptr) {
        report.status = CheckStatus::Error;
        report.detail = "unknown identity id";
        return report;
    }
    report.paper_ref = found->reference;
    try {
        const mpfr_prec_t effective = std::max(precision_bits, found->min_precision);
        report.precision_bits = effective;
        const PrecReal residual = found->residual(effective);
        if (residual.is_zero()) {
            report.residual_log10 = kExactZeroResidual;
            report.status = CheckStatus::Pass;
        } else {
            PrecReal l10(64);
            mpfr_log10(l10.raw(), residual.raw(), MPFR_RNDN);
            report.residual_log10 = static_cast<int>(std::floor(l10.to_double()));
            report.status = report.residual_log10 < found->tolerance_log10 ? CheckStatus::Pass
                                                                           : CheckStatus::Fail;
        }
    } catch (const std::exception& err) {
        report.status = CheckStatus::Error;
        report.detail = err.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

}  // namespace plv
