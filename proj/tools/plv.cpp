// plv - command-line front end for the polylogarithm / log-sine verification
// library: run named checks, evaluate the core functions directly, and test
// functional-equation files against the tensor criterion.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "plv/checks.hpp"
#include "plv/constants.hpp"
#include "plv/identities.hpp"
#include "plv/logsine.hpp"
#include "plv/polylog.hpp"
#include "plv/series.hpp"
#include "plv/svpolylog.hpp"
#include "plv/symtensor.hpp"

namespace {

using namespace plv;

mpfr_prec_t digits_to_bits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928095));
}

// Accepts: decimals ("0.25", "-3"), fractions ("1/3"), pi multiples
// ("pi", "pi/3", "5pi/6"), and log-phi multiples ("logphi", "2logphi").
PrecReal parse_real(const std::string& text, mpfr_prec_t prec) {
    const auto fail = [&text]() -> PrecReal {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    };
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    const auto finish = [&](PrecReal v) { return negative ? -v : v; };

    const size_t pi_pos = s.find("pi");
    const size_t phi_pos = s.find("logphi");
    if (phi_pos != std::string::npos) {
        const std::string head = s.substr(0, phi_pos);
        const std::string tail = s.substr(phi_pos + 6);
        if (!tail.empty()) return fail();
        PrecReal scale = head.empty() ? PrecReal::of(1L, prec) : PrecReal::from_string(head, prec);
        return finish(scale * constant(ConstantName::LogPhi, prec));
    }
    if (pi_pos != std::string::npos) {
        const std::string head = s.substr(0, pi_pos);
        const std::string tail = s.substr(pi_pos + 2);
        PrecReal value = head.empty() ? pi_value(prec) : PrecReal::from_string(head, prec) * pi_value(prec);
        if (!tail.empty()) {
            if (tail[0] != '/') return fail();
            value = value / PrecReal::from_string(tail.substr(1), prec);
        }
        return finish(value);
    }
    const size_t slash = s.find('/');
    if (slash != std::string::npos) {
        return finish(PrecReal::from_string(s.substr(0, slash), prec) /
                      PrecReal::from_string(s.substr(slash + 1), prec));
    }
    return finish(PrecReal::from_string(s, prec));
}

// "re", "re,im", or "i"/"-i".
PrecComplex parse_complex(const std::string& text, mpfr_prec_t prec) {
    if (text == "i") return PrecComplex::of(0.0, 1.0, prec);
    if (text == "-i") return PrecComplex::of(0.0, -1.0, prec);
    const size_t comma = text.find(',');
    if (comma == std::string::npos) return PrecComplex(parse_real(text, prec));
    return {parse_real(text.substr(0, comma), prec), parse_real(text.substr(comma + 1), prec)};
}

int cmd_eval(const std::vector<std::string>& args, mpfr_prec_t prec, size_t digits) {
    if (args.empty()) {
        std::cerr << "eval: expected a function name (li, d-classic, d-tilde, lsc, lshch, "
                     "lsc-pi, apery-sum, constant)\n";
        return 2;
    }
    const std::string& fn = args[0];
    const auto need = [&args, &fn](size_t n) {
        if (args.size() != n + 1) {
            throw std::invalid_argument("eval " + fn + ": expected " + std::to_string(n) +
                                        " arguments");
        }
    };
    if (fn == "li") {
        need(2);
        const int order = std::stoi(args[1]);
        std::cout << li(order, parse_complex(args[2], prec), prec).to_string(digits) << "\n";
    } else if (fn == "d-classic") {
        need(2);
        const int m = std::stoi(args[1]);
        std::cout << d_classic(m, parse_complex(args[2], prec), prec).to_string(digits) << "\n";
    } else if (fn == "d-tilde") {
        need(2);
        const int m = std::stoi(args[1]);
        std::cout << d_tilde(m, parse_complex(args[2], prec), prec).to_string(digits) << "\n";
    } else if (fn == "lsc" || fn == "lshch") {
        need(3);
        const int j = std::stoi(args[1]);
        const int k = std::stoi(args[2]);
        const PrecReal arg = parse_real(args[3], prec);
        const QuadratureResult r =
            fn == "lsc" ? lsc(j, k, arg, prec) : lshch(j, k, arg, prec);
        std::cout << r.value.to_string(digits) << "   (error <= " << r.error_estimate.to_string(3)
                  << ", levels " << r.levels_used << ")\n";
    } else if (fn == "lsc-pi") {
        need(2);
        std::cout << lsc_pi(std::stoi(args[1]), std::stoi(args[2]), prec).to_string(digits) << "\n";
    } else if (fn == "apery-sum") {
        need(1);
        const SeriesVariant variant = series_variant_from_string(args[1]);
        const long target = std::max<long>(10, static_cast<long>(digits > 0 ? digits : 50));
        const mpfr_prec_t bits = std::max<mpfr_prec_t>(prec, digits_to_bits(target) + 80);
        const auto [value, tail] = apery_sum(variant, bits, target);
        std::cout << value.to_string(digits) << "   (terms " << tail.terms << ", tail <= "
                  << tail.bound.to_string(3) << ")\n";
    } else if (fn == "constant") {
        need(1);
        std::cout << constant(constant_from_string(args[1]), prec).to_string(digits) << "\n";
    } else {
        std::cerr << "eval: unknown function '" << fn << "'\n";
        return 2;
    }
    return 0;
}

int cmd_check_fe(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "check-fe: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ParsedEquationFile parsed = parse_equation_file(buffer.str());
    const TensorElement tensor = tensor_invariant(parsed.sum, parsed.m);
    if (as_json) {
        std::cout << "{\"file\":\"" << path << "\",\"m\":" << parsed.m
                  << ",\"terms\":" << parsed.sum.size()
                  << ",\"tensor_zero\":" << (tensor.is_zero() ? "true" : "false")
                  << ",\"nonzero_keys\":" << tensor.size() << "}\n";
    } else {
        std::cout << path << ": m=" << parsed.m << ", " << parsed.sum.size() << " terms, tensor is "
                  << (tensor.is_zero() ? "ZERO (functional equation certified)"
                                       : "NONZERO (" + std::to_string(tensor.size()) + " basis keys)")
                  << "\n";
    }
    return tensor.is_zero() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numeric and symbolic verifier for Apery-like series, log-sine integrals, and "
                 "single-valued polylogarithm identities"};
    app.require_subcommand(1);

    long digits = 0;
    long precision_bits = 256;
    std::string format = "table";
    bool parallel = false;
    std::uint64_t seed = 0x5eed2026;
    app.add_option("--digits", digits, "decimal digit target (overrides --precision-bits)");
    app.add_option("--precision-bits", precision_bits, "working precision in bits (default 256)");
    app.add_option("--format", format, "report format: table|json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--parallel", parallel, "run suite checks concurrently");
    app.add_option("--seed", seed, "seed for the randomized property suites");

    std::string pattern;
    auto* verify = app.add_subcommand("verify", "run checks matching an id or glob");
    verify->add_option("pattern", pattern, "check id or glob (e.g. conj2, 'TBP-*', '*')")
        ->required();

    auto* list = app.add_subcommand("list", "list registered check ids");

    std::vector<std::string> eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a function directly");
    eval->add_option("args", eval_args, "function name and arguments")->expected(-1);
    eval->allow_extras();

    std::string fe_path;
    auto* checkfe = app.add_subcommand("check-fe", "test a functional-equation file");
    checkfe->add_option("file", fe_path, "equation file")->required();

    CLI11_PARSE(app, argc, argv);

    CheckOptions options;
    options.precision_bits = digits > 0 ? digits_to_bits(digits) : precision_bits;
    options.parallel = parallel;
    options.seed = seed;

    try {
        if (list->parsed()) {
            for (const auto& id : plv::registered_checks()) std::cout << id << "\n";
            return 0;
        }
        if (verify->parsed()) {
            const auto reports = plv::run_suite(pattern, options);
            if (reports.empty()) {
                std::cerr << "no checks match '" << pattern << "'\n";
                return 2;
            }
            std::cout << (format == "json" ? plv::format_json(reports)
                                           : plv::format_table(reports));
            return plv::exit_code(reports);
        }
        if (eval->parsed()) {
            const size_t out_digits = digits > 0 ? static_cast<size_t>(digits) : 0;
            return cmd_eval(eval_args, options.precision_bits, out_digits);
        }
        if (checkfe->parsed()) {
            return cmd_check_fe(fe_path, format == "json");
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
