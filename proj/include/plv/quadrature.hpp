#ifndef PLV_QUADRATURE_HPP
#define PLV_QUADRATURE_HPP

#include <functional>

#include "plv/prec.hpp"

namespace plv {

struct QuadratureResult {
    PrecReal value;
    PrecReal error_estimate;  // magnitude, >= 0
    int levels_used = 0;
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_estimate(std::move(best)) {}
    QuadratureResult best_estimate;
};

// Integrand evaluated at t; the distances t-a and b-t are passed alongside so
// endpoint-singular factors can be computed without cancellation.
using Integrand = std::function<PrecReal(const PrecReal& t, const PrecReal& from_a, const PrecReal& from_b)>;

// Double-exponential (tanh-sinh) quadrature of f over [a, b].  Absorbs
// logarithmic endpoint singularities; convergence is declared when two
// successive level refinements agree to ~2^-(precision+10).  Abscissae and
// weights are memoized per (precision, level).
QuadratureResult tanh_sinh(const Integrand& f, const PrecReal& a, const PrecReal& b,
                           mpfr_prec_t precision_bits, int max_levels = 12);

}  // namespace plv

#endif
