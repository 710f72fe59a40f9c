#ifndef PLV_LOGSINE_HPP
#define PLV_LOGSINE_HPP

#include "plv/quadrature.hpp"

namespace plv {

// Lsc_{j,k}(theta) = -Int_0^theta log^{j-1}|2 sin(t/2)| log^{k-1}|2 cos(t/2)| dt
// by tanh-sinh quadrature.  Domain [0, 2pi]; arguments beyond pi are folded
// with the symmetry of the integrand about t = pi.  Requires j, k >= 1 and
// j + k <= 6.  Repeated evaluations are cached per (j, k, theta, precision).
QuadratureResult lsc(int j, int k, const PrecReal& theta, mpfr_prec_t precision_bits);

// Hyperbolic analogue over [0, x], x >= 0 (capped at 100).
QuadratureResult lshch(int j, int k, const PrecReal& x, mpfr_prec_t precision_bits);

// Ls_j and Lsh_j shorthands (k = 1).
inline QuadratureResult ls(int j, const PrecReal& theta, mpfr_prec_t prec) { return lsc(j, 1, theta, prec); }
inline QuadratureResult lsh(int j, const PrecReal& x, mpfr_prec_t prec) { return lshch(j, 1, x, prec); }

// Lsc_{j,k}(pi) - Lsc_{k,j}(pi - theta), the reflection route: the pi value
// comes from the closed-form generating function, the rest from quadrature.
PrecReal lsc_reflect(int j, int k, const PrecReal& theta, mpfr_prec_t precision_bits);

// Lsc_{j,k}(pi) extracted from the generating function
//   sum_{m,n} Lsc_{m+1,n+1}(pi) x^m y^n / (m! n!)
//     = -2^{x+y} Gamma((1+x)/2) Gamma((1+y)/2) / Gamma(1+(x+y)/2),
// whose logarithm has zeta-value coefficients.  Supports j + k <= 6.
PrecReal lsc_pi(int j, int k, mpfr_prec_t precision_bits);

}  // namespace plv

#endif
