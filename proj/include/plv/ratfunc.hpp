#ifndef PLV_RATFUNC_HPP
#define PLV_RATFUNC_HPP

#include <map>
#include <vector>

#include "plv/prec.hpp"

namespace plv {

// Dense univariate polynomial over Q.  Coefficients ascend by degree and the
// leading coefficient is nonzero unless the polynomial is zero.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const mpq_class& v);
    static RatPoly variable();

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& coeff(int i) const;
    const mpq_class& lc() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator*(const mpq_class& s) const;

    // Euclidean division; remainder degree < divisor degree.
    static std::pair<RatPoly, RatPoly> divrem(const RatPoly& num, const RatPoly& den);
    // Monic gcd.
    static RatPoly gcd(RatPoly a, RatPoly b);

    RatPoly derivative() const;
    RatPoly monic() const;
    RatPoly pow(unsigned e) const;

    mpq_class eval(const mpq_class& x) const;
    PrecComplex eval(const PrecComplex& x) const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }
    // Canonical order: degree first, then coefficients from the top down.
    friend bool operator<(const RatPoly& a, const RatPoly& b);

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<mpq_class> c_;
};

// Quotient of two polynomials, kept with gcd(num, den) = 1 and a monic
// denominator (the rational scale lives in the numerator coefficients).
class RatFunc {
  public:
    RatFunc() : num_(RatPoly::constant(0)), den_(RatPoly::constant(1)) {}
    RatFunc(RatPoly num, RatPoly den);

    static RatFunc constant(const mpq_class& v) { return {RatPoly::constant(v), RatPoly::constant(1)}; }
    static RatFunc variable() { return {RatPoly::variable(), RatPoly::constant(1)}; }

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Value when constant (den is monic constant 1).
    mpq_class constant_value() const { return num_.is_zero() ? mpq_class(0) : num_.coeff(0); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return {-num_, den_}; }
    RatFunc pow(long e) const;

    PrecComplex eval(const PrecComplex& x) const;  // throws on an exact pole

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    std::string to_string(const std::string& var = "t") const;

  private:
    RatPoly num_, den_;
};

// sign * prod p^e * prod q(t)^f with primes p and monic irreducible q over Q;
// multiplying everything back reconstructs the source exactly.
struct FactoredElement {
    int sign = 1;
    std::map<mpz_class, long> prime_exponents;
    std::map<RatPoly, long> irreducible_exponents;

    RatFunc reconstruct() const;
};

// Exact multiplicative decomposition of a nonzero rational function.
FactoredElement factor(const RatFunc& f);

// Monic irreducible factors over Q with multiplicities (content dropped);
// exposed for direct testing of the factorization core.
std::vector<std::pair<RatPoly, int>> factor_poly(const RatPoly& p);

// Prime factorization of a nonzero rational; exponents may be negative.
std::map<mpz_class, long> factor_rational(const mpq_class& value);

}  // namespace plv

#endif
