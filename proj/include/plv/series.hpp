#ifndef PLV_SERIES_HPP
#define PLV_SERIES_HPP

#include <string_view>
#include <utility>

#include "plv/prec.hpp"

namespace plv {

// The four central-binomial series and the two conjecture left-hand sides:
//   Conj2A   sum binom(2n,n) / ((2n+1)^4 16^n)
//   Conj2B   sum binom(2n,n) H_{2n} / ((2n+1)^3 16^n)
//   Conj1A   sum binom(2n,n) / ((2n+1)^3 (-16)^n)
//   Conj1B   sum binom(2n,n) H_{2n} / ((2n+1)^2 (-16)^n)
//   Conj2Lhs sum binom(2n,n) (9 H_{2n+1} + 32/(2n+1)) / ((2n+1)^3 16^n)
//   Conj1Lhs sum binom(2n,n) (5 H_{2n+1} + 12/(2n+1)) / ((2n+1)^2 (-16)^n)
enum class SeriesVariant { Conj2A, Conj2B, Conj1A, Conj1B, Conj2Lhs, Conj1Lhs };

SeriesVariant series_variant_from_string(std::string_view name);

mpz_class central_binomial(unsigned long n);
mpq_class harmonic_number(unsigned long n);

struct TailBound {
    unsigned long terms = 0;  // number of terms summed (n = 0 .. terms-1)
    PrecReal bound;           // certified bound on the omitted remainder
};

// Exact term n of the series as a rational.
mpq_class series_term(SeriesVariant variant, unsigned long n);

// Partial sum over n = 0..n_terms-1; terms are exact rationals rounded once.
PrecReal apery_partial_sum(SeriesVariant variant, unsigned long n_terms, mpfr_prec_t precision_bits);

// Certified bound on |sum_{n >= n_terms} term(n)| from the geometric
// majorant |term(n+1)/term(n)| <= (1 + 1/n)/4.
PrecReal apery_tail_bound(SeriesVariant variant, unsigned long n_terms, mpfr_prec_t precision_bits);

// Sums enough terms that the certified tail is below 10^-(target_digits+5).
std::pair<PrecReal, TailBound> apery_sum(SeriesVariant variant, mpfr_prec_t precision_bits,
                                         long target_digits);

// Closed forms used to property-test the raw series:
//   BinomHalf     sum_{n>=1} binom(2n,n) z^n / (2n)            = log(1+chi)
//   BinomHarmonic sum_{n>=1} binom(2n,n) H_{2n-1} z^n
//   HarmonicTrig  sum_{n>=1} binom(2n,n) H_{2n} z^{2n+1}  (algebraic form)
//   HarmonicHyp   the hyperbolic analogue tanh(th)(log 2cosh(th/2) - log 2cosh th)
// with chi = (1 - sqrt(1-4z)) / (1 + sqrt(1-4z)).
enum class ClosedForm { BinomHalf, BinomHarmonic, HarmonicTrig, HarmonicHyp };

PrecReal genfunc_closed(ClosedForm which, const PrecReal& z, mpfr_prec_t precision_bits);

// The four series-to-integral reduction identities; returns |LHS - RHS| where
// the LHS is the direct series and the RHS combines log powers with log-sine
// (or log-sinh) integrals evaluated by quadrature.
enum class ReductionFamily {
    LscPlain,        // sum binom z^{2n+1}/(2n+1)^{p+1} vs Ls_{j+1}(2 theta)
    LshchPlain,      // alternating analogue vs Lsh_{j+1}(2 theta)
    LscHarmonic,     // sum binom H_{2n} z^{2n+1}/(2n+1)^p vs Lsc terms
    LshchHarmonic,   // alternating analogue vs Lshch terms
};

ReductionFamily reduction_family_from_string(std::string_view name);

PrecReal series_to_integral_residual(ReductionFamily family, int p, const PrecReal& z,
                                     mpfr_prec_t precision_bits);

}  // namespace plv

#endif
