#ifndef PLV_SVPOLYLOG_HPP
#define PLV_SVPOLYLOG_HPP

#include "plv/prec.hpp"

namespace plv {

// Parity projection R_m: imaginary part for even m, real part for odd m.
PrecReal parity_projection(int m, const PrecComplex& w);

// Zagier's D_m on the closed unit disk (x != 0, 1):
//   D_m(x) = R_m( sum_{j=0}^{m} (-log|x|)^{m-j}/(m-j)! Li_j(x) ),  Li_0 = -1/2.
PrecReal d_classic(int m, const PrecComplex& x, mpfr_prec_t precision_bits);

// Single-valued variant, defined on all of C by the inversion relation
// Dt_m(x) = (-1)^(m-1) Dt_m(1/x) outside the closed disk, with Dt_m(0) = 0
// and Dt_m(1) = zeta(m) for odd m, 0 for even m.
PrecReal d_tilde(int m, const PrecComplex& x, mpfr_prec_t precision_bits);
PrecReal d_tilde(int m, const PrecReal& x, mpfr_prec_t precision_bits);

// Residual of the distribution relation
//   | Dt_m(x^N) - N^(m-1) sum_{j<N} Dt_m(x e^{2 pi i j/N}) |
// for N in {2, 3, 4, 6}.
PrecReal check_distribution(int m, int n_parts, const PrecComplex& x, mpfr_prec_t precision_bits);

}  // namespace plv

#endif
