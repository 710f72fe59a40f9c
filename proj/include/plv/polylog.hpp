#ifndef PLV_POLYLOG_HPP
#define PLV_POLYLOG_HPP

#include "plv/prec.hpp"

namespace plv {

// Li_j(z) for j = 0..4 on the closed unit disk (z != 1 when j <= 1).
// Li_0 is the constant -1/2, Li_1(z) = -log(1-z) on the principal branch.
// Points with |z| > 1 beyond a 2^(-precision/2) tolerance are rejected.
PrecComplex li(int order, const PrecComplex& z, mpfr_prec_t precision_bits);

}  // namespace plv

#endif
