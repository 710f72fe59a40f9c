#ifndef PLV_PREC_HPP
#define PLV_PREC_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <utility>

namespace plv {

// Smallest working precision accepted anywhere in the library.
inline constexpr mpfr_prec_t kMinPrecision = 64;

// Sentinel returned by agree_bits() when two values are identical.
inline constexpr int kAgreeExact = INT_MAX;

// Arbitrary-precision real number.  Every value carries its own precision;
// arithmetic between two values rounds to the smaller of the two precisions.
class PrecReal {
  public:
    PrecReal() : PrecReal(kMinPrecision) {}

    explicit PrecReal(mpfr_prec_t prec) {
        check_precision(prec);
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }

    PrecReal(const PrecReal& o) {
        mpfr_init2(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    PrecReal(PrecReal&& o) noexcept {
        mpfr_init2(v_, kMinPrecision);
        mpfr_swap(v_, o.v_);
    }

    PrecReal& operator=(const PrecReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    PrecReal& operator=(PrecReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~PrecReal() { mpfr_clear(v_); }

    static PrecReal of(double value, mpfr_prec_t prec) {
        PrecReal r(prec);
        mpfr_set_d(r.v_, value, MPFR_RNDN);
        return r;
    }

    static PrecReal of(long value, mpfr_prec_t prec) {
        PrecReal r(prec);
        mpfr_set_si(r.v_, value, MPFR_RNDN);
        return r;
    }

    static PrecReal of(int value, mpfr_prec_t prec) { return of(static_cast<long>(value), prec); }

    static PrecReal of(const mpq_class& value, mpfr_prec_t prec) {
        PrecReal r(prec);
        mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static PrecReal of(const mpz_class& value, mpfr_prec_t prec) {
        PrecReal r(prec);
        mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static PrecReal from_string(const std::string& text, mpfr_prec_t prec) {
        PrecReal r(prec);
        if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
            throw std::invalid_argument("PrecReal: cannot parse \"" + text + "\"");
        }
        return r;
    }

    // 2^e at the given precision (exact).
    static PrecReal two_pow(long e, mpfr_prec_t prec) {
        PrecReal r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    // Rounds a copy to the requested precision.
    PrecReal round_to(mpfr_prec_t prec) const {
        check_precision(prec);
        PrecReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string to_string(size_t digits = 0) const;

    PrecReal operator-() const {
        PrecReal r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    PrecReal& operator+=(const PrecReal& o) { return *this = *this + o; }
    PrecReal& operator-=(const PrecReal& o) { return *this = *this - o; }
    PrecReal& operator*=(const PrecReal& o) { return *this = *this * o; }
    PrecReal& operator/=(const PrecReal& o) { return *this = *this / o; }

    friend PrecReal operator+(const PrecReal& a, const PrecReal& b) {
        PrecReal r(joint(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend PrecReal operator-(const PrecReal& a, const PrecReal& b) {
        PrecReal r(joint(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend PrecReal operator*(const PrecReal& a, const PrecReal& b) {
        PrecReal r(joint(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend PrecReal operator/(const PrecReal& a, const PrecReal& b) {
        PrecReal r(joint(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    // Scalar variants keep this value's precision (integers are exact).
    friend PrecReal operator*(const PrecReal& a, long k) {
        PrecReal r(a.precision());
        mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend PrecReal operator*(long k, const PrecReal& a) { return a * k; }
    friend PrecReal operator/(const PrecReal& a, long k) {
        PrecReal r(a.precision());
        mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend PrecReal operator+(const PrecReal& a, long k) {
        PrecReal r(a.precision());
        mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend PrecReal operator+(long k, const PrecReal& a) { return a + k; }
    friend PrecReal operator-(const PrecReal& a, long k) { return a + (-k); }
    friend PrecReal operator-(long k, const PrecReal& a) {
        PrecReal r(a.precision());
        mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const PrecReal& a, const PrecReal& b) { return !(a == b); }
    friend bool operator<(const PrecReal& a, const PrecReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const PrecReal& a, const PrecReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const PrecReal& a, const PrecReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const PrecReal& a, const PrecReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend bool operator==(const PrecReal& a, long k) { return mpfr_cmp_si(a.v_, k) == 0; }
    friend bool operator<(const PrecReal& a, long k) { return mpfr_cmp_si(a.v_, k) < 0; }
    friend bool operator>(const PrecReal& a, long k) { return mpfr_cmp_si(a.v_, k) > 0; }

    static void check_precision(mpfr_prec_t prec) {
        if (prec < kMinPrecision) {
            throw std::invalid_argument("precision below the 64-bit minimum");
        }
    }

  private:
    static mpfr_prec_t joint(const PrecReal& a, const PrecReal& b) {
        return std::min(a.precision(), b.precision());
    }

    mpfr_t v_;
};

#define PLV_REAL_FN1(name, mpfr_name)                     \
    inline PrecReal name(const PrecReal& a) {             \
        PrecReal r(a.precision());                        \
        mpfr_name(r.raw(), a.raw(), MPFR_RNDN);           \
        return r;                                         \
    }

PLV_REAL_FN1(abs, mpfr_abs)
PLV_REAL_FN1(sqrt, mpfr_sqrt)
PLV_REAL_FN1(exp, mpfr_exp)
PLV_REAL_FN1(log, mpfr_log)
PLV_REAL_FN1(log1p, mpfr_log1p)
PLV_REAL_FN1(sin, mpfr_sin)
PLV_REAL_FN1(cos, mpfr_cos)
PLV_REAL_FN1(tan, mpfr_tan)
PLV_REAL_FN1(asin, mpfr_asin)
PLV_REAL_FN1(atan, mpfr_atan)
PLV_REAL_FN1(sinh, mpfr_sinh)
PLV_REAL_FN1(cosh, mpfr_cosh)
PLV_REAL_FN1(tanh, mpfr_tanh)
PLV_REAL_FN1(asinh, mpfr_asinh)
PLV_REAL_FN1(floor, mpfr_rint_floor)

#undef PLV_REAL_FN1

inline PrecReal atan2(const PrecReal& y, const PrecReal& x) {
    PrecReal r(std::min(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline PrecReal hypot(const PrecReal& x, const PrecReal& y) {
    PrecReal r(std::min(y.precision(), x.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

inline PrecReal pow_si(const PrecReal& a, long e) {
    PrecReal r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

inline PrecReal mul_2si(const PrecReal& a, long e) {
    PrecReal r(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

inline PrecReal min(const PrecReal& a, const PrecReal& b) { return a <= b ? a : b; }
inline PrecReal max(const PrecReal& a, const PrecReal& b) { return a >= b ? a : b; }

inline PrecReal pi_value(mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

// Number of leading bits in which a and b agree.  Identical values yield
// kAgreeExact; when either operand is zero the magnitude convention
// -log2|a-b| applies.
int agree_bits(const PrecReal& a, const PrecReal& b);

// Complex value built from two reals; the pair shares one precision (the
// smaller of the two at construction).
class PrecComplex {
  public:
    PrecComplex() : re_(), im_() {}

    explicit PrecComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {
        mpfr_set_zero(re_.raw(), 1);
        mpfr_set_zero(im_.raw(), 1);
    }

    PrecComplex(PrecReal re, PrecReal im) : re_(std::move(re)), im_(std::move(im)) {
        const mpfr_prec_t p = std::min(re_.precision(), im_.precision());
        re_ = re_.round_to(p);
        im_ = im_.round_to(p);
    }

    // Real value promoted with zero imaginary part.
    PrecComplex(const PrecReal& re) : re_(re), im_(re.precision()) {  // NOLINT(google-explicit-constructor)
        mpfr_set_zero(im_.raw(), 1);
    }

    static PrecComplex of(double re, double im, mpfr_prec_t prec) {
        return {PrecReal::of(re, prec), PrecReal::of(im, prec)};
    }

    const PrecReal& real() const { return re_; }
    const PrecReal& imag() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == 1; }

    PrecComplex round_to(mpfr_prec_t prec) const { return {re_.round_to(prec), im_.round_to(prec)}; }

    PrecComplex conj() const { return {re_, -im_}; }

    PrecComplex operator-() const { return {-re_, -im_}; }

    friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend PrecComplex operator*(const PrecComplex& a, const PrecReal& s) { return {a.re_ * s, a.im_ * s}; }
    friend PrecComplex operator*(const PrecReal& s, const PrecComplex& a) { return a * s; }
    friend PrecComplex operator*(const PrecComplex& a, long k) { return {a.re_ * k, a.im_ * k}; }
    friend PrecComplex operator/(const PrecComplex& a, long k) { return {a.re_ / k, a.im_ / k}; }
    friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
        PrecReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    friend PrecComplex operator/(const PrecReal& s, const PrecComplex& b) { return PrecComplex(s) / b; }

    friend bool operator==(const PrecComplex& a, const PrecComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const PrecComplex& a, const PrecComplex& b) { return !(a == b); }

    PrecComplex& operator+=(const PrecComplex& o) { return *this = *this + o; }
    PrecComplex& operator-=(const PrecComplex& o) { return *this = *this - o; }
    PrecComplex& operator*=(const PrecComplex& o) { return *this = *this * o; }

    std::string to_string(size_t digits = 0) const;

  private:
    PrecReal re_, im_;
};

inline PrecReal abs(const PrecComplex& z) { return hypot(z.real(), z.imag()); }
inline PrecReal arg(const PrecComplex& z) { return atan2(z.imag(), z.real()); }

inline PrecComplex exp(const PrecComplex& z) {
    PrecReal m = exp(z.real());
    return {m * cos(z.imag()), m * sin(z.imag())};
}

// Principal branch.
inline PrecComplex log(const PrecComplex& z) { return {log(abs(z)), arg(z)}; }

PrecComplex pow_si(const PrecComplex& z, long e);

// e^{i*theta}
inline PrecComplex unit_circle(const PrecReal& theta) { return {cos(theta), sin(theta)}; }

}  // namespace plv

#endif
