#ifndef PLV_SYMTENSOR_HPP
#define PLV_SYMTENSOR_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "plv/ratfunc.hpp"

namespace plv {

// Expression over named variables with exact rational scalars.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    mpq_class number;
    std::string var;
    ExprPtr a, b;
    long exponent = 0;

    static ExprPtr make_number(const mpq_class& v);
    static ExprPtr make_var(std::string name);
    static ExprPtr unary(Kind k, ExprPtr x);
    static ExprPtr binary(Kind k, ExprPtr x, ExprPtr y);
    static ExprPtr power(ExprPtr x, long e);
};

std::set<std::string> expr_variables(const ExprPtr& e);
ExprPtr expr_substitute(const ExprPtr& e, const std::map<std::string, mpq_class>& subst);
ExprPtr expr_rename(const ExprPtr& e, const std::map<std::string, std::string>& renames);
// Collapses to a rational function of main_var; every other variable must be
// resolved.  Throws on division by the zero function.
RatFunc expr_to_ratfunc(const ExprPtr& e, const std::string& main_var);
PrecComplex expr_eval(const ExprPtr& e, const std::map<std::string, PrecComplex>& assignment,
                      mpfr_prec_t precision_bits);

// One bracket term of a formal Q-linear combination n * [ argument ].
struct FormalTerm {
    mpq_class coeff;
    ExprPtr arg;
    bool literal_one = false;  // the source text was the constant bracket [1]
};

class FormalSum {
  public:
    FormalSum() = default;
    explicit FormalSum(std::vector<FormalTerm> terms) : terms_(std::move(terms)) {}

    const std::vector<FormalTerm>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    std::set<std::string> variables() const;

    FormalSum substituted(const std::map<std::string, mpq_class>& subst) const;
    // Merges syntactically equal arguments after univariate normalization;
    // drops terms whose coefficients cancel.
    FormalSum merged(const std::string& var) const;

    friend FormalSum operator+(const FormalSum& a, const FormalSum& b);

  private:
    std::vector<FormalTerm> terms_;
};

// Parses a sum of `<rational-coeff> * [ <expr> ]` terms.  Arguments that are
// identically 0, or identically 1 without being the literal bracket [1], are
// rejected with the offending term named.
FormalSum parse_formal_sum(const std::string& text);

struct ParsedEquationFile {
    int m = 0;
    std::string var;
    std::map<std::string, mpq_class> substitutions;
    FormalSum sum;
};

// File format: `#` comments, headers `m = 3|4`, `var = x`,
// optional `subst y = 1/3`, then one term per line.
ParsedEquationFile parse_equation_file(const std::string& content);

// Normalized univariate view: coefficient, rational-function argument.
struct UnivariateTerm {
    mpq_class coeff;
    RatFunc arg;
};
std::vector<UnivariateTerm> to_univariate(const FormalSum& sum, const std::string& var);

// Generator of the multiplicative group: a prime or a monic irreducible.
struct Generator {
    bool is_prime = true;
    mpz_class prime;
    RatPoly poly;

    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.is_prime != b.is_prime) return a.is_prime;  // primes first
        if (a.is_prime) return a.prime < b.prime;
        return a.poly < b.poly;
    }
    friend bool operator==(const Generator& a, const Generator& b) {
        return a.is_prime == b.is_prime && (a.is_prime ? a.prime == b.prime : a.poly == b.poly);
    }
    std::string to_string() const;
};

// Basis key of Sym^{m-2} tensor Wedge^2: a sorted generator multiset and an
// oriented generator pair with w1 < w2.
struct TensorKey {
    std::vector<Generator> sym;
    Generator w1, w2;

    friend bool operator<(const TensorKey& a, const TensorKey& b) {
        if (a.sym != b.sym) return std::lexicographical_compare(a.sym.begin(), a.sym.end(),
                                                                b.sym.begin(), b.sym.end());
        if (!(a.w1 == b.w1)) return a.w1 < b.w1;
        return a.w2 < b.w2;
    }
};

class TensorElement {
  public:
    using Map = std::map<TensorKey, mpq_class>;

    void add(TensorKey key, const mpq_class& coeff);
    void prune();
    bool is_zero() const { return coeffs_.empty(); }
    const Map& coefficients() const { return coeffs_; }
    size_t size() const { return coeffs_.size(); }

  private:
    Map coeffs_;
};

inline bool is_zero(const TensorElement& t) { return t.is_zero(); }

// Zagier's criterion element  sum_i n_i [x_i]^{m-2} (x) ([x_i] /\ [1-x_i])
// over the Q-basis of primes and monic irreducibles, sign (torsion) dropped.
// Constant arguments expand multiplicatively like any other; [1] contributes
// nothing since 1 - x vanishes.  Requires m in {3, 4} and univariate input.
TensorElement tensor_invariant(const FormalSum& sum, int m);
TensorElement tensor_invariant(const std::vector<UnivariateTerm>& terms, int m);

// Built-in combinations: Kummer's H(x,y) and F(x,y) = H(x,y) + H(y,x), the
// 21-term G(x), its three structured sub-equations, and the classical
// three-term relation.
enum class Builtin { H, F, G, Sub1, Sub2, Sub3, ThreeTerm };
Builtin builtin_from_string(std::string_view name);
FormalSum builtin(Builtin which, const std::map<std::string, mpq_class>& substitution = {});

// sum_i n_i Dt_m(x_i(assignment)).  Arguments that evaluate exactly to 0 or
// a pole contribute 0, exactly 1 contributes zeta(m) (odd m only); values
// merely near {0, 1, infinity} (within 2^-precision/4) are rejected.
PrecReal numeric_eval(const FormalSum& sum, int m,
                      const std::map<std::string, PrecComplex>& assignment,
                      mpfr_prec_t precision_bits);

}  // namespace plv

#endif
