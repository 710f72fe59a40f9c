#ifndef PLV_CONSTANTS_HPP
#define PLV_CONSTANTS_HPP

#include <string_view>

#include "plv/prec.hpp"

namespace plv {

enum class ConstantName { Pi, Log2, Zeta2, Zeta3, Beta4, LogPhi, Catalan };

// Parses one of: pi, log2, zeta2, zeta3, beta4, logphi, catalan.
// Unknown names are rejected.
ConstantName constant_from_string(std::string_view name);
std::string_view constant_to_string(ConstantName name);

// Returns the constant correct to within 2^(10-precision_bits).  Each value
// is computed at precision_bits+64 and re-verified at +128; disagreement
// doubles the guard (at most twice).  Results are memoized per
// (name, precision) and safe for concurrent readers.
PrecReal constant(ConstantName name, mpfr_prec_t precision_bits);

// zeta(n) for integer n != 1: positive arguments, zeta(0) = -1/2, zero at
// negative even integers, and -B_{2r}/(2r) at n = 1-2r.  Memoized.
PrecReal zeta_int(long n, mpfr_prec_t precision_bits);

// Dirichlet beta(s) for integer s >= 2 by the Cohen-Rodriguez-Villegas-Zagier
// alternating-series acceleration.
PrecReal dirichlet_beta(long s, mpfr_prec_t precision_bits);

// zeta(3) summed through Apery's central-binomial series
// (5/2) * sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)).
PrecReal zeta3_apery(mpfr_prec_t precision_bits);

}  // namespace plv

#endif
