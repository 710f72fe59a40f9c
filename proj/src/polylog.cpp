#include "plv/polylog.hpp"

#include <stdexcept>

#include "plv/constants.hpp"

namespace plv {

namespace {

// Direct defining series, good away from the unit circle (|z| <= 3/4).
PrecComplex li_taylor(int j, const PrecComplex& z, mpfr_prec_t wp) {
    PrecComplex sum(wp);
    PrecComplex zpow{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    const PrecReal eps = PrecReal::two_pow(-static_cast<long>(wp) - 8, wp);
    // |z|^n / n^j < eps terminates; |z| <= 3/4 gives a geometric tail.
    const unsigned long cap = 4 * static_cast<unsigned long>(wp) + 64;
    for (unsigned long n = 1; n <= cap; ++n) {
        zpow = zpow * z;
        unsigned long nj = 1;
        for (int i = 0; i < j; ++i) nj *= n;
        PrecComplex term{zpow.real() / static_cast<long>(nj), zpow.imag() / static_cast<long>(nj)};
        sum += term;
        if (abs(zpow) < eps) return sum;
    }
    throw std::runtime_error("li: Taylor series failed to converge");
}

// Expansion of Li_j(e^mu) in powers of mu, |mu| < 2 pi:
//   Li_j(e^mu) = (H_{j-1} - log(-mu)) mu^{j-1}/(j-1)!
//              + sum_{k>=0, k!=j-1} zeta(j-k) mu^k / k!
PrecComplex li_mu_expansion(int j, const PrecComplex& mu, mpfr_prec_t wp) {
    PrecComplex sum(wp);
    PrecComplex mupow{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
    PrecReal kfact = PrecReal::of(1L, wp);
    const PrecReal eps = PrecReal::two_pow(-static_cast<long>(wp) - 8, wp);
    const unsigned long cap = 4 * static_cast<unsigned long>(wp) + 64;
    int small_streak = 0;
    for (unsigned long k = 0; k <= cap; ++k) {
        if (k > 0) {
            mupow = mupow * mu;
            kfact = kfact * static_cast<long>(k);
        }
        if (static_cast<long>(k) == j - 1) {
            PrecReal h(wp);
            mpfr_set_zero(h.raw(), 1);
            for (int i = 1; i <= j - 1; ++i) h += PrecReal::of(1L, wp) / i;
            sum += (PrecComplex(h) - log(-mu)) * mupow / PrecComplex(kfact);
            continue;
        }
        const long zarg = j - static_cast<long>(k);
        if (zarg < 0 && (-zarg) % 2 == 0) continue;  // zeta vanishes
        PrecReal coeff = zeta_int(zarg, wp) / kfact;
        sum += mupow * coeff;
        if (static_cast<long>(k) > j + 1) {
            // Tail ratio is (|mu|/2pi)^2 per surviving term.
            if (abs(mupow) * abs(coeff) < eps) {
                if (++small_streak >= 2) return sum;
            } else {
                small_streak = 0;
            }
        }
    }
    throw std::runtime_error("li: mu-expansion failed to converge");
}

}  // namespace

PrecComplex li(int order, const PrecComplex& z, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    if (order < 0 || order > 4) throw std::domain_error("li: order must be in 0..4");
    const mpfr_prec_t wp = precision_bits + 64;

    if (order == 0) {
        // Zagier's convention: identically -1/2.
        return PrecComplex{PrecReal::of(-1L, precision_bits) / 2L, PrecReal::of(0L, precision_bits)};
    }

    const PrecComplex zw = z.round_to(wp);
    const PrecReal az = abs(zw);
    const PrecReal tol = PrecReal::two_pow(-static_cast<long>(precision_bits) / 2, wp);
    if (az > PrecReal::of(1L, wp) + tol) {
        throw std::domain_error("li: |z| > 1 is outside the supported domain");
    }
    if (zw.is_one()) {
        if (order <= 1) throw std::domain_error("li: pole at z = 1");
        return PrecComplex(zeta_int(order, precision_bits));
    }
    if (order == 1) {
        PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
        return (-log(one - zw)).round_to(precision_bits);
    }

    PrecComplex result(wp);
    if (az * 4L <= PrecReal::of(3L, wp)) {
        result = li_taylor(order, zw, wp);
    } else {
        result = li_mu_expansion(order, log(zw), wp);
    }
    return result.round_to(precision_bits);
}

}  // namespace plv
