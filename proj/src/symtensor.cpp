#include "plv/symtensor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "plv/constants.hpp"
#include "plv/svpolylog.hpp"

namespace plv {

// ------------------------------------------------------------------- Expr --

ExprPtr Expr::make_number(const mpq_class& v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    e->number = v;
    return e;
}

ExprPtr Expr::make_var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    e->var = std::move(name);
    return e;
}

ExprPtr Expr::unary(Kind k, ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(x);
    return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr x, ExprPtr y) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}

ExprPtr Expr::power(ExprPtr x, long exp) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->a = std::move(x);
    e->exponent = exp;
    return e;
}

namespace {

void collect_vars(const ExprPtr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == Expr::Kind::Var) out.insert(e->var);
    collect_vars(e->a, out);
    collect_vars(e->b, out);
}

}  // namespace

std::set<std::string> expr_variables(const ExprPtr& e) {
    std::set<std::string> out;
    collect_vars(e, out);
    return out;
}

ExprPtr expr_substitute(const ExprPtr& e, const std::map<std::string, mpq_class>& subst) {
    if (!e) return e;
    switch (e->kind) {
        case Expr::Kind::Number:
            return e;
        case Expr::Kind::Var: {
            auto it = subst.find(e->var);
            return it == subst.end() ? e : Expr::make_number(it->second);
        }
        case Expr::Kind::Neg:
            return Expr::unary(e->kind, expr_substitute(e->a, subst));
        case Expr::Kind::Pow:
            return Expr::power(expr_substitute(e->a, subst), e->exponent);
        default:
            return Expr::binary(e->kind, expr_substitute(e->a, subst), expr_substitute(e->b, subst));
    }
}

ExprPtr expr_rename(const ExprPtr& e, const std::map<std::string, std::string>& renames) {
    if (!e) return e;
    switch (e->kind) {
        case Expr::Kind::Number:
            return e;
        case Expr::Kind::Var: {
            auto it = renames.find(e->var);
            return it == renames.end() ? e : Expr::make_var(it->second);
        }
        case Expr::Kind::Neg:
            return Expr::unary(e->kind, expr_rename(e->a, renames));
        case Expr::Kind::Pow:
            return Expr::power(expr_rename(e->a, renames), e->exponent);
        default:
            return Expr::binary(e->kind, expr_rename(e->a, renames), expr_rename(e->b, renames));
    }
}

RatFunc expr_to_ratfunc(const ExprPtr& e, const std::string& main_var) {
    switch (e->kind) {
        case Expr::Kind::Number:
            return RatFunc::constant(e->number);
        case Expr::Kind::Var:
            if (e->var != main_var) {
                throw std::invalid_argument("unresolved variable '" + e->var + "' in argument");
            }
            return RatFunc::variable();
        case Expr::Kind::Neg:
            return -expr_to_ratfunc(e->a, main_var);
        case Expr::Kind::Pow:
            return expr_to_ratfunc(e->a, main_var).pow(e->exponent);
        case Expr::Kind::Add:
            return expr_to_ratfunc(e->a, main_var) + expr_to_ratfunc(e->b, main_var);
        case Expr::Kind::Sub:
            return expr_to_ratfunc(e->a, main_var) - expr_to_ratfunc(e->b, main_var);
        case Expr::Kind::Mul:
            return expr_to_ratfunc(e->a, main_var) * expr_to_ratfunc(e->b, main_var);
        case Expr::Kind::Div:
            return expr_to_ratfunc(e->a, main_var) / expr_to_ratfunc(e->b, main_var);
    }
    throw std::logic_error("unreachable expr kind");
}

PrecComplex expr_eval(const ExprPtr& e, const std::map<std::string, PrecComplex>& assignment,
                      mpfr_prec_t prec) {
    switch (e->kind) {
        case Expr::Kind::Number:
            return PrecComplex(PrecReal::of(e->number, prec));
        case Expr::Kind::Var: {
            auto it = assignment.find(e->var);
            if (it == assignment.end()) {
                throw std::invalid_argument("unassigned variable '" + e->var + "'");
            }
            return it->second.round_to(prec);
        }
        case Expr::Kind::Neg:
            return -expr_eval(e->a, assignment, prec);
        case Expr::Kind::Pow: {
            const PrecComplex base = expr_eval(e->a, assignment, prec);
            if (base.is_zero() && e->exponent < 0) throw std::domain_error("pole in expression");
            return pow_si(base, e->exponent);
        }
        case Expr::Kind::Add:
            return expr_eval(e->a, assignment, prec) + expr_eval(e->b, assignment, prec);
        case Expr::Kind::Sub:
            return expr_eval(e->a, assignment, prec) - expr_eval(e->b, assignment, prec);
        case Expr::Kind::Mul:
            return expr_eval(e->a, assignment, prec) * expr_eval(e->b, assignment, prec);
        case Expr::Kind::Div: {
            const PrecComplex den = expr_eval(e->b, assignment, prec);
            if (den.is_zero()) throw std::domain_error("pole in expression");
            return expr_eval(e->a, assignment, prec) / den;
        }
    }
    throw std::logic_error("unreachable expr kind");
}

// ----------------------------------------------------------------- parser --

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    FormalSum parse_sum() {
        std::vector<FormalTerm> terms;
        skip_ws();
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (get() == '-') ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            terms.push_back(parse_term(sign));
            skip_ws();
            first = false;
        }
        if (terms.empty()) fail("empty formal sum");
        return FormalSum{std::move(terms)};
    }

    ExprPtr parse_expression_all() {
        skip_ws();
        ExprPtr e = parse_expr();
        skip_ws();
        if (!eof()) fail("trailing input after expression");
        return e;
    }

  private:
    FormalTerm parse_term(int sign) {
        skip_ws();
        mpq_class coeff(sign);
        if (peek() != '[') {
            coeff *= parse_rational();
            skip_ws();
            if (peek() == '*') {
                get();
                skip_ws();
            }
        }
        expect('[');
        const size_t start = pos_;
        skip_ws();
        ExprPtr arg = parse_expr();
        skip_ws();
        expect(']');
        FormalTerm term;
        term.coeff = coeff;
        term.arg = arg;
        term.literal_one = arg->kind == Expr::Kind::Number && arg->number == 1;
        // Arguments identically 0 or 1 are rejected; the literal [1] stays.
        if (arg->kind == Expr::Kind::Number && !term.literal_one) {
            if (arg->number == 0) fail_at(start, "argument is identically 0");
        }
        if (expr_variables(arg).empty() && !term.literal_one) {
            // constant-folded expression: evaluate and police 0/1
            const mpq_class v = fold_constant(arg);
            if (v == 0) fail_at(start, "argument is identically 0");
            if (v == 1) fail_at(start, "argument is identically 1");
        }
        return term;
    }

    mpq_class fold_constant(const ExprPtr& e) {
        switch (e->kind) {
            case Expr::Kind::Number: return e->number;
            case Expr::Kind::Neg: return -fold_constant(e->a);
            case Expr::Kind::Pow: {
                mpq_class base = fold_constant(e->a);
                if (base == 0 && e->exponent <= 0) fail("zero to a nonpositive power");
                mpq_class acc(1);
                for (long i = 0; i < (e->exponent < 0 ? -e->exponent : e->exponent); ++i) acc *= base;
                return e->exponent < 0 ? mpq_class(1) / acc : acc;
            }
            case Expr::Kind::Add: return fold_constant(e->a) + fold_constant(e->b);
            case Expr::Kind::Sub: return fold_constant(e->a) - fold_constant(e->b);
            case Expr::Kind::Mul: return fold_constant(e->a) * fold_constant(e->b);
            case Expr::Kind::Div: {
                mpq_class d = fold_constant(e->b);
                if (d == 0) fail("division by zero in constant argument");
                return fold_constant(e->a) / d;
            }
            default: fail("unexpected variable in constant fold");
        }
        return 0;
    }

    ExprPtr parse_expr() {  // addition level
        ExprPtr e = parse_product();
        skip_ws();
        while (!eof() && (peek() == '+' || peek() == '-')) {
            const char op = get();
            skip_ws();
            ExprPtr rhs = parse_product();
            e = Expr::binary(op == '+' ? Expr::Kind::Add : Expr::Kind::Sub, e, rhs);
            skip_ws();
        }
        return e;
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_factor();
        skip_ws();
        while (!eof() && (peek() == '*' || peek() == '/')) {
            const char op = get();
            skip_ws();
            ExprPtr rhs = parse_factor();
            e = Expr::binary(op == '*' ? Expr::Kind::Mul : Expr::Kind::Div, e, rhs);
            skip_ws();
        }
        return e;
    }

    ExprPtr parse_factor() {
        skip_ws();
        if (peek() == '-') {
            get();
            return Expr::unary(Expr::Kind::Neg, parse_factor());
        }
        if (peek() == '+') {
            get();
            return parse_factor();
        }
        ExprPtr base;
        if (peek() == '(') {
            get();
            base = parse_expr();
            skip_ws();
            expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            base = Expr::make_number(parse_integer());
        } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            base = Expr::make_var(parse_identifier());
        } else {
            fail("expected a factor");
        }
        skip_ws();
        if (!eof() && peek() == '^') {
            get();
            skip_ws();
            long sign = 1;
            if (peek() == '-') {
                get();
                sign = -1;
            }
            const mpq_class e = parse_integer();
            if (e.get_den() != 1 || !e.get_num().fits_slong_p()) fail("exponent must be an integer");
            return Expr::power(base, sign * e.get_num().get_si());
        }
        return base;
    }

    mpq_class parse_rational() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        mpq_class num = parse_integer();
        skip_ws();
        if (!eof() && peek() == '/') {
            const size_t save = pos_;
            get();
            skip_ws();
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                mpq_class den = parse_integer();
                if (den == 0) fail("zero denominator in coefficient");
                num /= den;
            } else {
                pos_ = save;
            }
        }
        return neg ? mpq_class(-num) : num;
    }

    mpq_class parse_integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        return mpq_class(mpz_class(digits));
    }

    std::string parse_identifier() {
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            name += get();
        }
        return name;
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    [[noreturn]] void fail(const std::string& message) { fail_at(pos_, message); }
    [[noreturn]] void fail_at(size_t where, const std::string& message) {
        std::ostringstream out;
        out << "parse error at offset " << where << ": " << message;
        throw std::invalid_argument(out.str());
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

FormalSum parse_formal_sum(const std::string& text) { return Parser(text).parse_sum(); }

ParsedEquationFile parse_equation_file(const std::string& content) {
    ParsedEquationFile out;
    std::string body;
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.rfind("m", 0) == 0 && line.find('=') != std::string::npos && line.find('[') == std::string::npos) {
            const std::string rhs = line.substr(line.find('=') + 1);
            out.m = std::stoi(rhs);
            continue;
        }
        if (line.rfind("var", 0) == 0 && line.find('=') != std::string::npos) {
            std::string rhs = line.substr(line.find('=') + 1);
            rhs.erase(0, rhs.find_first_not_of(" \t"));
            rhs.erase(rhs.find_last_not_of(" \t") + 1);
            out.var = rhs;
            continue;
        }
        if (line.rfind("subst", 0) == 0) {
            std::istringstream ss(line.substr(5));
            std::string name, eq, value;
            ss >> name >> eq >> value;
            if (eq != "=") throw std::invalid_argument("malformed subst line: " + line);
            mpq_class v(value);
            v.canonicalize();
            out.substitutions[name] = v;
            continue;
        }
        if (!body.empty() && line[0] != '+' && line[0] != '-') body += " + ";
        else body += " ";
        body += line;
    }
    if (out.m != 3 && out.m != 4) throw std::invalid_argument("equation file: header 'm = 3|4' required");
    if (out.var.empty()) throw std::invalid_argument("equation file: header 'var = <name>' required");
    out.sum = parse_formal_sum(body);
    if (!out.substitutions.empty()) out.sum = out.sum.substituted(out.substitutions);
    return out;
}

// -------------------------------------------------------------- FormalSum --

std::set<std::string> FormalSum::variables() const {
    std::set<std::string> out;
    for (const auto& t : terms_) collect_vars(t.arg, out);
    return out;
}

FormalSum FormalSum::substituted(const std::map<std::string, mpq_class>& subst) const {
    std::vector<FormalTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        out.push_back(FormalTerm{t.coeff, expr_substitute(t.arg, subst), t.literal_one});
    }
    return FormalSum{std::move(out)};
}

FormalSum FormalSum::merged(const std::string& var) const {
    std::map<RatFunc, mpq_class> acc;
    for (const auto& t : to_univariate(*this, var)) acc[t.arg] += t.coeff;
    std::vector<FormalTerm> out;
    for (const auto& [arg, coeff] : acc) {
        if (coeff == 0) continue;
        // Rebuild a minimal expression for reporting purposes only.
        FormalTerm term;
        term.coeff = coeff;
        term.literal_one = arg.is_constant() && arg.constant_value() == 1;
        if (arg.is_constant()) {
            term.arg = Expr::make_number(arg.constant_value());
        } else {
            term.arg = Expr::make_var(var + ":" + arg.to_string(var));
        }
        out.push_back(std::move(term));
    }
    return FormalSum{std::move(out)};
}

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
    std::vector<FormalTerm> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return FormalSum{std::move(terms)};
}

std::vector<UnivariateTerm> to_univariate(const FormalSum& sum, const std::string& var) {
    std::vector<UnivariateTerm> out;
    out.reserve(sum.size());
    size_t index = 0;
    for (const auto& t : sum.terms()) {
        ++index;
        RatFunc f = expr_to_ratfunc(t.arg, var);
        if (!t.literal_one) {
            if (f.is_zero()) {
                throw std::invalid_argument("term " + std::to_string(index) +
                                            " degenerates to the constant 0");
            }
            if (f.is_constant() && f.constant_value() == 1) {
                throw std::invalid_argument("term " + std::to_string(index) +
                                            " degenerates to the constant 1");
            }
        }
        out.push_back(UnivariateTerm{t.coeff, std::move(f)});
    }
    return out;
}

// ----------------------------------------------------------------- tensor --

std::string Generator::to_string() const {
    return is_prime ? prime.get_str() : "(" + poly.to_string() + ")";
}

void TensorElement::add(TensorKey key, const mpq_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void TensorElement::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) it = coeffs_.erase(it);
        else ++it;
    }
}

namespace {

std::vector<std::pair<Generator, long>> generator_vector(const FactoredElement& fe) {
    std::vector<std::pair<Generator, long>> out;
    for (const auto& [p, e] : fe.prime_exponents) {
        Generator g;
        g.is_prime = true;
        g.prime = p;
        out.emplace_back(std::move(g), e);
    }
    for (const auto& [q, e] : fe.irreducible_exponents) {
        Generator g;
        g.is_prime = false;
        g.poly = q;
        out.emplace_back(std::move(g), e);
    }
    return out;
}

}  // namespace

TensorElement tensor_invariant(const std::vector<UnivariateTerm>& terms, int m) {
    if (m != 3 && m != 4) throw std::domain_error("tensor_invariant: m must be 3 or 4");
    TensorElement acc;
    size_t index = 0;
    for (const auto& term : terms) {
        ++index;
        if (term.arg.is_constant() && term.arg.constant_value() == 1) continue;  // [1]
        const RatFunc one_minus = RatFunc::constant(1) - term.arg;
        if (one_minus.is_zero()) {
            throw std::invalid_argument("term " + std::to_string(index) + " has argument 1");
        }
        const auto xvec = generator_vector(factor(term.arg));
        const auto yvec = generator_vector(factor(one_minus));

        // wedge part [x] /\ [1-x]
        std::vector<std::pair<std::pair<Generator, Generator>, mpq_class>> wedge;
        for (const auto& [gx, a] : xvec) {
            for (const auto& [gy, b] : yvec) {
                if (gx == gy) continue;
                mpq_class w = mpq_class(a) * b;
                if (gy < gx) {
                    wedge.emplace_back(std::make_pair(gy, gx), -w);
                } else {
                    wedge.emplace_back(std::make_pair(gx, gy), w);
                }
            }
        }

        if (m == 3) {
            for (const auto& [g, a] : xvec) {
                for (const auto& [pair, w] : wedge) {
                    TensorKey key;
                    key.sym = {g};
                    key.w1 = pair.first;
                    key.w2 = pair.second;
                    acc.add(std::move(key), term.coeff * a * w);
                }
            }
        } else {
            for (const auto& [g1, a1] : xvec) {
                for (const auto& [g2, a2] : xvec) {
                    std::vector<Generator> sym = {g1, g2};
                    if (sym[1] < sym[0]) std::swap(sym[0], sym[1]);
                    for (const auto& [pair, w] : wedge) {
                        TensorKey key;
                        key.sym = sym;
                        key.w1 = pair.first;
                        key.w2 = pair.second;
                        acc.add(std::move(key), term.coeff * a1 * a2 * w);
                    }
                }
            }
        }
    }
    acc.prune();
    return acc;
}

TensorElement tensor_invariant(const FormalSum& sum, int m) {
    const auto vars = sum.variables();
    if (vars.size() > 1) {
        throw std::invalid_argument("tensor_invariant: input must be univariate (apply a substitution)");
    }
    const std::string var = vars.empty() ? "x" : *vars.begin();
    return tensor_invariant(to_univariate(sum, var), m);
}

// --------------------------------------------------------------- builtins --

namespace {

// Kummer's H(x,y) with xi = 1-x, eta = 1-y.
constexpr const char* kKummerH =
    "1*[ x^2*y / ((1-y)^2*(1-x)) ]"
    " + 1*[ -(1-y)*x^2*y / (1-x) ]"
    " - 3*[ -x / ((1-y)*(1-x)) ]"
    " - 3*[ -(1-y)*x / (1-x) ]"
    " - 3*[ x / (1-y) ]"
    " - 3*[ (1-y)*x ]"
    " + 6*[ -x / (1-x) ]"
    " - 6*[ -x*y / (1-y) ]"
    " + 6*[ x ]"
    " - 3*[ x*y / ((1-y)*(1-x)) ]"
    " - 3*[ x*y ]";

constexpr const char* kViaG =
    "5*[ (1-2*x) / ((1-x)^3*(1+x)) ]"
    " + 6*[ -(1-x)^3 / (2-x)^3 ]"
    " - 6*[ 1 / (1-x)^3 ]"
    " - 15*[ (1-x)*(1+x) / (1-2*x) ]"
    " - 15*[ (1-2*x) / (1-x)^2 ]"
    " - 18*[ (1-x) / (2-x)^2 ]"
    " + 18*[ -1 / ((1-x)*(2-x)) ]"
    " - 3*[ 1 / ((1-x)*(1+x)) ]"
    " - 10*[ (1-2*x) / (2-x) ]"
    " - 10*[ (2-x) / (1+x) ]"
    " + 15*[ -x / (1-2*x) ]"
    " + 15*[ x / (1-x) ]"
    " - 24*[ -(1-x) / (1+x) ]"
    " + 24*[ (1-x) / (1+x) ]"
    " + 45*[ (1-2*x) / (1-x) ]"
    " - 54*[ -(1-x) / (2-x) ]"
    " + 36*[ 1 / (2-x) ]"
    " + 6*[ 1 / (1-x) ]"
    " - 18*[ 1 / (1+x) ]"
    " + 42*[ -1 / (1-x) ]"
    " - 34*[ 1 ]";

constexpr const char* kSub1 =
    "-1*[ (1-2*x) / ((1-x)^3*(1+x)) ]"
    " + 3*[ (1-2*x) / (1-x)^2 ]"
    " + 3*[ (1-x)*(1+x) / (1-2*x) ]"
    " + 3*[ 1 / ((1-x)*(1+x)) ]"
    " - 6*[ (1-2*x) / (1-x) ]"
    " + 2*[ (1-2*x) / (2-x) ]"
    " + 2*[ (2-x) / (1+x) ]"
    " + 6*[ -1 / (1-x) ]"
    " - 6*[ 1 / (1+x) ]"
    " + 5*[ 1 ]";

constexpr const char* kSub2 =
    "-1*[ -(1-x)^3 / (2-x)^3 ]"
    " + 1*[ 1 / (1-x)^3 ]"
    " + 3*[ (1-x) / (2-x)^2 ]"
    " - 3*[ -1 / ((1-x)*(2-x)) ]"
    " + 9*[ -(1-x) / (2-x) ]"
    " - 12*[ -1 / (1-x) ]"
    " - 9*[ 1 / (1-x) ]"
    " - 6*[ 1 / (2-x) ]"
    " + 6*[ 1 ]";

constexpr const char* kSub3 =
    "2*[ 1 / ((1-x)*(1+x)) ]"
    " - 4*[ -(1-x) / (1+x) ]"
    " + 4*[ (1-x) / (1+x) ]"
    " - 8*[ 1 / (1-x) ]"
    " - 8*[ 1 / (1+x) ]"
    " + 7*[ 1 ]";

constexpr const char* kThreeTerm =
    "1*[ x / (1-x) ]"
    " + 1*[ (1-2*x) / (1-x) ]"
    " + 1*[ -x / (1-2*x) ]"
    " - 1*[ 1 ]";

const FormalSum& cached_builtin(Builtin which) {
    static const FormalSum h = parse_formal_sum(kKummerH);
    static const FormalSum f = [] {
        const std::map<std::string, std::string> swap{{"x", "y"}, {"y", "x"}};
        std::vector<FormalTerm> swapped;
        for (const auto& t : h.terms()) {
            swapped.push_back(FormalTerm{t.coeff, expr_rename(t.arg, swap), t.literal_one});
        }
        return h + FormalSum{std::move(swapped)};
    }();
    static const FormalSum g = parse_formal_sum(kViaG);
    static const FormalSum s1 = parse_formal_sum(kSub1);
    static const FormalSum s2 = parse_formal_sum(kSub2);
    static const FormalSum s3 = parse_formal_sum(kSub3);
    static const FormalSum three = parse_formal_sum(kThreeTerm);
    switch (which) {
        case Builtin::H: return h;
        case Builtin::F: return f;
        case Builtin::G: return g;
        case Builtin::Sub1: return s1;
        case Builtin::Sub2: return s2;
        case Builtin::Sub3: return s3;
        case Builtin::ThreeTerm: return three;
    }
    throw std::logic_error("unreachable builtin");
}

}  // namespace

Builtin builtin_from_string(std::string_view name) {
    if (name == "H" || name == "h") return Builtin::H;
    if (name == "F" || name == "f") return Builtin::F;
    if (name == "G" || name == "g") return Builtin::G;
    if (name == "sub1") return Builtin::Sub1;
    if (name == "sub2") return Builtin::Sub2;
    if (name == "sub3") return Builtin::Sub3;
    if (name == "threeterm") return Builtin::ThreeTerm;
    throw std::invalid_argument("unknown builtin combination: " + std::string(name));
}

FormalSum builtin(Builtin which, const std::map<std::string, mpq_class>& substitution) {
    const FormalSum& base = cached_builtin(which);
    if (substitution.empty()) return base;
    FormalSum out = base.substituted(substitution);
    // Degenerate substitutions surface here rather than deep in the tensor.
    const auto vars = out.variables();
    if (vars.size() <= 1) {
        const std::string var = vars.empty() ? "x" : *vars.begin();
        (void)to_univariate(out, var);
    }
    return out;
}

// ----------------------------------------------------------- numeric_eval --

PrecReal numeric_eval(const FormalSum& sum, int m,
                      const std::map<std::string, PrecComplex>& assignment,
                      mpfr_prec_t precision_bits) {
    if (m < 2 || m > 4) throw std::domain_error("numeric_eval: m must be in 2..4");
    PrecReal::check_precision(precision_bits);
    const mpfr_prec_t wp = precision_bits + 64;
    const PrecReal near = PrecReal::two_pow(-static_cast<long>(precision_bits) / 4, wp);
    const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};

    PrecReal acc(wp);
    mpfr_set_zero(acc.raw(), 1);
    size_t index = 0;
    for (const auto& term : sum.terms()) {
        ++index;
        PrecComplex value(wp);
        bool at_pole = false;
        try {
            value = expr_eval(term.arg, assignment, wp);
        } catch (const std::domain_error&) {
            at_pole = true;  // exact pole: Dt_m tends to 0 by inversion
        }
        if (at_pole) continue;
        if (value.is_zero()) continue;
        if (value.is_one()) {
            if (m % 2 == 1) acc += zeta_int(m, wp) * PrecReal::of(term.coeff, wp);
            continue;
        }
        if (abs(value) < near || abs(value - one) < near || abs(value) > PrecReal::of(1L, wp) / near) {
            throw std::domain_error("numeric_eval: term " + std::to_string(index) +
                                    " is near-degenerate at this assignment");
        }
        acc += d_tilde(m, value, wp) * PrecReal::of(term.coeff, wp);
    }
    return acc.round_to(precision_bits);
}

}  // namespace plv
