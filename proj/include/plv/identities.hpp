#ifndef PLV_IDENTITIES_HPP
#define PLV_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "plv/prec.hpp"
#include "plv/report.hpp"

namespace plv {

// Fixed points of the evaluations: rho = e^{2 pi i/12}, its half-power
// rho^{1/2} = e^{2 pi i/24}, r = |1 - rho| = (sqrt6 - sqrt2)/2, and the
// golden ratio phi = (1 + sqrt5)/2.
struct SpecialPoints {
    explicit SpecialPoints(mpfr_prec_t precision_bits);

    // e^{2 pi i k / 24}; rho^j is half_power(2 j).
    PrecComplex half_power(int k) const;
    PrecComplex rho_power(int k) const { return half_power(2 * k); }

    mpfr_prec_t prec;
    PrecReal r;
    PrecReal phi;
    PrecReal sqrt3;
    PrecReal sqrt5;
};

// Closed form of Ls_4 on (0, pi):
//   (3/2) zeta(3) theta + (3/2) { -Dt_4(e^{i theta}) - 4 Dt_4(1 - e^{i theta}) }.
PrecReal ls4_closed(const PrecReal& theta, mpfr_prec_t precision_bits);

// Closed form of Lsc_{3,2} on (0, pi).
PrecReal lsc32_closed(const PrecReal& theta, mpfr_prec_t precision_bits);

// Closed forms of Lsh_3, Lshch_{1,3}, Lshch_{2,2} on (0, infinity).
enum class HypClosedForm { Lsh3, Lshch13, Lshch22 };
PrecReal lsh_closed(HypClosedForm which, const PrecReal& x, mpfr_prec_t precision_bits);

// psi(t) = Dt_3(1-t) - Dt_3(1-1/t), t not in {0, 1}.
PrecReal psi3(const PrecComplex& t, mpfr_prec_t precision_bits);

// Paths x = f(e^{i theta}) along which d/d theta Dt_m has a closed form.
enum class CirclePath { Exp, NegExp, OneMinusExp, OnePlusExp, Cayley, OneMinusExp2 };

// |central difference - analytic derivative| of Dt_m along the path at
// theta0, with step h = 2^-40.
PrecReal derivative_residual(CirclePath path, int m, const PrecReal& theta0,
                             mpfr_prec_t precision_bits);
// The analytic side alone (exposed so the closed-corollary forms can be
// cross-checked in tests).
PrecReal derivative_rhs(CirclePath path, int m, const PrecReal& theta0, mpfr_prec_t precision_bits);

// A named numeric identity: evaluate both sides, return |LHS - RHS|.
struct IdentityCheck {
    std::string id;
    std::string reference;       // human-readable statement of the equation
    int tolerance_log10;         // PASS iff residual < 10^tolerance_log10
    mpfr_prec_t min_precision;   // precision floor baked into the check
    std::function<PrecReal(mpfr_prec_t)> residual;
};

const std::vector<IdentityCheck>& identity_registry();

// Runs one registry entry; unknown ids yield an ERROR report.
CheckReport identity_residual(const std::string& id, mpfr_prec_t precision_bits);

}  // namespace plv

#endif
