#include "plv/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "plv/logsine.hpp"

namespace plv {

namespace {

mpq_class frac(long num, unsigned long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

struct VariantShape {
    int power;         // exponent of (2n+1)
    bool alternating;  // (-16)^n vs 16^n
    int kind;          // 0: plain, 1: H_{2n}, 2: LHS form a*H_{2n+1} + b/(2n+1)
    long a = 0, b = 0;
};

VariantShape shape_of(SeriesVariant v) {
    switch (v) {
        case SeriesVariant::Conj2A: return {4, false, 0};
        case SeriesVariant::Conj2B: return {3, false, 1};
        case SeriesVariant::Conj1A: return {3, true, 0};
        case SeriesVariant::Conj1B: return {2, true, 1};
        case SeriesVariant::Conj2Lhs: return {3, false, 2, 9, 32};
        case SeriesVariant::Conj1Lhs: return {2, true, 2, 5, 12};
    }
    throw std::logic_error("unreachable variant");
}

// Iterates exact terms; binom(2n,n) and the harmonic numbers advance
// incrementally.
class TermStream {
  public:
    explicit TermStream(SeriesVariant v) : shape_(shape_of(v)) {}

    // Returns term(n) for the current n, then advances.
    mpq_class next() {
        mpq_class weight;
        if (shape_.kind == 0) {
            weight = 1;
        } else if (shape_.kind == 1) {
            weight = h2n_;
        } else {
            const mpq_class h2n1 = h2n_ + frac(1, 2 * n_ + 1);
            weight = shape_.a * h2n1 + frac(shape_.b, 2 * n_ + 1);
        }
        mpz_class denom_pow(1);
        for (int i = 0; i < shape_.power; ++i) denom_pow *= 2 * n_ + 1;
        mpq_class term = mpq_class(binom_) * weight / mpq_class(denom_pow * pow16_);
        if (shape_.alternating && n_ % 2 == 1) term = -term;
        advance();
        return term;
    }

  private:
    void advance() {
        binom_ *= 2 * (2 * n_ + 1);
        mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(), n_ + 1);
        h2n_ += frac(1, 2 * n_ + 1);
        h2n_ += frac(1, 2 * n_ + 2);
        pow16_ *= 16;
        ++n_;
    }

    VariantShape shape_;
    unsigned long n_ = 0;
    mpz_class binom_ = 1;
    mpq_class h2n_ = 0;
    mpz_class pow16_ = 1;
};

PrecReal zero_at(mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_set_zero(r.raw(), 1);
    return r;
}

mpq_class tail_bound_from_term(const mpq_class& first_omitted, unsigned long n) {
    // |term(k+1)/term(k)| <= (1 + 1/k)/4 for k >= 1, monotone in k, so the
    // omitted tail is a geometric series with ratio q = (1 + 1/n)/4 < 1/2.
    const mpq_class q = frac(static_cast<long>(n) + 1, 4 * n);
    return abs(first_omitted) / (1 - q);
}

}  // namespace

SeriesVariant series_variant_from_string(std::string_view name) {
    if (name == "conj2-a") return SeriesVariant::Conj2A;
    if (name == "conj2-b") return SeriesVariant::Conj2B;
    if (name == "conj1-a") return SeriesVariant::Conj1A;
    if (name == "conj1-b") return SeriesVariant::Conj1B;
    if (name == "conj2-lhs") return SeriesVariant::Conj2Lhs;
    if (name == "conj1-lhs") return SeriesVariant::Conj1Lhs;
    throw std::invalid_argument("unknown series variant: " + std::string(name));
}

mpz_class central_binomial(unsigned long n) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r;
}

mpq_class harmonic_number(unsigned long n) {
    mpq_class h = 0;
    for (unsigned long k = 1; k <= n; ++k) h += frac(1, k);
    return h;
}

mpq_class series_term(SeriesVariant variant, unsigned long n) {
    TermStream stream(variant);
    mpq_class t;
    for (unsigned long i = 0; i <= n; ++i) t = stream.next();
    return t;
}

PrecReal apery_partial_sum(SeriesVariant variant, unsigned long n_terms, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    TermStream stream(variant);
    PrecReal sum = zero_at(wp);
    for (unsigned long n = 0; n < n_terms; ++n) sum += PrecReal::of(stream.next(), wp);
    return sum.round_to(precision_bits);
}

PrecReal apery_tail_bound(SeriesVariant variant, unsigned long n_terms, mpfr_prec_t precision_bits) {
    if (n_terms < 2) throw std::invalid_argument("apery_tail_bound: need n_terms >= 2");
    PrecReal::check_precision(precision_bits);
    const mpq_class bound = tail_bound_from_term(series_term(variant, n_terms), n_terms);
    return PrecReal::of(bound, precision_bits + 64).round_to(precision_bits);
}

std::pair<PrecReal, TailBound> apery_sum(SeriesVariant variant, mpfr_prec_t precision_bits,
                                         long target_digits) {
    PrecReal::check_precision(precision_bits);
    if (target_digits < 10) throw std::invalid_argument("apery_sum: target_digits >= 10 required");
    const long needed = static_cast<long>(std::ceil(static_cast<double>(target_digits) * 3.33)) + 64;
    if (precision_bits < needed) {
        throw std::invalid_argument("apery_sum: precision too small for the digit target");
    }
    const mpfr_prec_t wp = precision_bits + 64;
    // 16^-n term decay: N ~ (digits+5)/log10(4) plus headroom.
    unsigned long n_terms =
        static_cast<unsigned long>(std::ceil(static_cast<double>(target_digits + 5) / 0.60206)) + 20;
    constexpr unsigned long kTermCap = 10000;
    const PrecReal target = pow_si(PrecReal::of(10L, wp), -(target_digits + 5));

    TermStream stream(variant);
    PrecReal sum = zero_at(wp);
    unsigned long summed = 0;
    mpq_class pending = stream.next();  // term(summed)
    while (true) {
        while (summed < n_terms) {
            sum += PrecReal::of(pending, wp);
            ++summed;
            pending = stream.next();
        }
        const mpq_class bound_q = tail_bound_from_term(pending, summed);
        const PrecReal bound = PrecReal::of(bound_q, wp);
        if (bound <= target) {
            return {sum.round_to(precision_bits), TailBound{summed, bound.round_to(precision_bits)}};
        }
        if (n_terms >= kTermCap) throw std::runtime_error("apery_sum: digit target unreachable");
        n_terms = std::min(kTermCap, n_terms + n_terms / 2 + 16);
    }
}

PrecReal genfunc_closed(ClosedForm which, const PrecReal& z, mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal zw = z.round_to(wp);
    const PrecReal one = PrecReal::of(1L, wp);
    if (zw.sign() < 0) throw std::domain_error("genfunc_closed: z must be nonnegative");

    switch (which) {
        case ClosedForm::BinomHalf:
        case ClosedForm::BinomHarmonic: {
            if (!(zw * 4L < one)) throw std::domain_error("genfunc_closed: need z < 1/4");
            const PrecReal s = sqrt(one - zw * 4L);
            const PrecReal chi = (one - s) / (one + s);
            if (which == ClosedForm::BinomHalf) return log(one + chi).round_to(precision_bits);
            const PrecReal val =
                (chi * log(one + chi) - (one + chi) * log(one - chi)) * 2L / (one - chi);
            return val.round_to(precision_bits);
        }
        case ClosedForm::HarmonicTrig: {
            if (!(zw * 2L < one)) throw std::domain_error("genfunc_closed: need z < 1/2");
            if (zw.is_zero()) return zero_at(precision_bits);
            const PrecReal s = sqrt(one - zw * zw * 4L);
            const PrecReal val =
                zw / s * (log(PrecReal::of(2L, wp) / (one + s)) - log(s * 2L / (one + s)) * 2L);
            return val.round_to(precision_bits);
        }
        case ClosedForm::HarmonicHyp: {
            if (!(zw * 2L < one)) throw std::domain_error("genfunc_closed: need z < 1/2");
            if (zw.is_zero()) return zero_at(precision_bits);
            const PrecReal th = asinh(zw * 2L);
            const PrecReal val = tanh(th) * (log(cosh(th / 2L) * 2L) - log(cosh(th) * 2L));
            return val.round_to(precision_bits);
        }
    }
    throw std::logic_error("unreachable closed form");
}

ReductionFamily reduction_family_from_string(std::string_view name) {
    if (name == "eqn-lsc-1") return ReductionFamily::LscPlain;
    if (name == "eqn-lshch-1") return ReductionFamily::LshchPlain;
    if (name == "eqn-lsc-2") return ReductionFamily::LscHarmonic;
    if (name == "eqn-lshch-2") return ReductionFamily::LshchHarmonic;
    throw std::invalid_argument("unknown reduction family: " + std::string(name));
}

namespace {

long binom_small(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Direct numerical sum of binom(2n,n) z^{2n+1} w(n) / (2n+1)^s with w = 1 or
// H_{2n}, optionally alternating.
PrecReal reduction_series(bool harmonic, bool alternating, int s, const PrecReal& z,
                          mpfr_prec_t wp) {
    PrecReal sum = zero_at(wp);
    const PrecReal eps = PrecReal::two_pow(-static_cast<long>(wp) - 8, wp);
    const PrecReal z2 = z * z;
    PrecReal zpow = z;  // z^{2n+1}
    mpz_class binom = 1;
    mpq_class h2n = 0;
    constexpr unsigned long kCap = 2000000;
    for (unsigned long n = 0; n < kCap; ++n) {
        if (!(harmonic && n == 0)) {
            PrecReal term = PrecReal::of(binom, wp) * zpow;
            if (harmonic) term = term * PrecReal::of(h2n, wp);
            term = term / pow_si(PrecReal::of(2 * static_cast<long>(n) + 1, wp), s);
            if (alternating && n % 2 == 1) term = -term;
            sum += term;
            if (n > 4 && abs(term) < eps) return sum;
        }
        binom *= 2 * (2 * n + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), n + 1);
        h2n += frac(1, 2 * n + 1);
        h2n += frac(1, 2 * n + 2);
        zpow = zpow * z2;
    }
    throw std::runtime_error("reduction_series: no convergence");
}

}  // namespace

PrecReal series_to_integral_residual(ReductionFamily family, int p, const PrecReal& z,
                                     mpfr_prec_t precision_bits) {
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal zw = z.round_to(wp);
    const PrecReal one = PrecReal::of(1L, wp);
    const bool harmonic =
        family == ReductionFamily::LscHarmonic || family == ReductionFamily::LshchHarmonic;
    const bool hyperbolic =
        family == ReductionFamily::LshchPlain || family == ReductionFamily::LshchHarmonic;
    if (p < (harmonic ? 1 : 0)) throw std::domain_error("series_to_integral_residual: p too small");
    if (!(zw.sign() > 0) || zw * 2L > one) {
        throw std::domain_error("series_to_integral_residual: need 0 < z <= 1/2");
    }
    if (family == ReductionFamily::LshchHarmonic && zw * 2L == one) {
        throw std::domain_error("series_to_integral_residual: z = 1/2 excluded for eqn-lshch-2");
    }

    const PrecReal theta = hyperbolic ? asinh(zw * 2L) : asin(zw * 2L);
    // log(2 sin theta) resp. log(2 sinh theta); both equal log(4z).
    const PrecReal big_l = log(zw * 4L);

    PrecReal rhs = zero_at(wp);
    long pfact = 1;
    for (int i = 2; i <= p; ++i) pfact *= i;
    if (!harmonic) {
        rhs = theta / 2L * pow_si(big_l, p) / pfact;
        for (int j = 1; j <= p; ++j) {
            PrecReal contrib = pow_si(big_l, p - j) * binom_small(p, j);
            const PrecReal integral = hyperbolic ? lshch(j + 1, 1, theta * 2L, wp).value
                                                 : lsc(j + 1, 1, theta * 2L, wp).value;
            contrib = contrib * integral / (4 * pfact);
            rhs += (j % 2 == 1) ? contrib : -contrib;
        }
    } else {
        long pm1fact = 1;
        for (int i = 2; i <= p - 1; ++i) pm1fact *= i;
        for (int j = 1; j <= p; ++j) {
            PrecReal inner = (hyperbolic ? lshch(j, 2, theta * 2L, wp).value
                                         : lsc(j, 2, theta * 2L, wp).value) / 2L;
            for (int l = 1; l <= j; ++l) {
                const PrecReal part = hyperbolic ? lshch(l, j - l + 2, theta, wp).value
                                                 : lsc(l, j - l + 2, theta, wp).value;
                inner -= part * binom_small(j - 1, l - 1);
            }
            PrecReal contrib = pow_si(big_l, p - j) * binom_small(p - 1, j - 1) * inner / pm1fact;
            rhs += (j % 2 == 1) ? contrib : -contrib;
        }
    }

    const int s = harmonic ? p : p + 1;
    const PrecReal lhs = reduction_series(harmonic, hyperbolic, s, zw, wp);
    return abs(lhs - rhs).round_to(precision_bits);
}

}  // namespace plv
