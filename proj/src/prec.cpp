#include "plv/prec.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace plv {

std::string PrecReal::to_string(size_t digits) const {
    if (digits == 0) {
        // Enough digits to reproduce the value: ceil(prec * log10(2)) + 2.
        digits = static_cast<size_t>(static_cast<double>(precision()) * 0.30103) + 2;
    }
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Rg", static_cast<int>(digits), v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string PrecComplex::to_string(size_t digits) const {
    if (im_.is_zero()) return re_.to_string(digits);
    std::string s = re_.to_string(digits);
    if (im_.sign() >= 0) s += " + " + im_.to_string(digits) + "i";
    else s += " - " + (-im_).to_string(digits) + "i";
    return s;
}

int agree_bits(const PrecReal& a, const PrecReal& b) {
    if (a.is_nan() || b.is_nan()) return 0;
    if (a == b) return kAgreeExact;
    const mpfr_prec_t wp = std::max(a.precision(), b.precision()) + 8;
    PrecReal diff(wp);
    mpfr_sub(diff.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDN);
    if (diff.is_zero()) return kAgreeExact;
    const mpfr_exp_t ediff = mpfr_get_exp(diff.raw());
    if (a.is_zero() || b.is_zero()) {
        // Magnitude convention: report -log2 |a-b|.
        return static_cast<int>(1 - ediff);
    }
    const mpfr_exp_t ea = mpfr_get_exp(a.raw());
    const mpfr_exp_t eb = mpfr_get_exp(b.raw());
    const long bits = static_cast<long>(std::max(ea, eb) - ediff);
    return static_cast<int>(std::max(bits, 0L));
}

PrecComplex pow_si(const PrecComplex& z, long e) {
    if (e == 0) return PrecComplex{PrecReal::of(1L, z.precision()), PrecReal::of(0L, z.precision())};
    const bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    PrecComplex base = z;
    PrecComplex acc{PrecReal::of(1L, z.precision()), PrecReal::of(0L, z.precision())};
    while (n > 0) {
        if (n & 1UL) acc = acc * base;
        base = base * base;
        n >>= 1UL;
    }
    if (invert) acc = PrecReal::of(1L, z.precision()) / acc;
    return acc;
}

}  // namespace plv
