#include "plv/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <sstream>

#include "plv/constants.hpp"
#include "plv/identities.hpp"
#include "plv/series.hpp"
#include "plv/svpolylog.hpp"
#include "plv/symtensor.hpp"

#include "json.hpp"

namespace plv {

namespace {

PrecReal zero_at(mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_set_zero(r.raw(), 1);
    return r;
}

// ----------------------------------------------------- symbolic fe checks --

struct SymbolicCheck {
    std::string id;
    std::string reference;
    Builtin which;
    std::map<std::string, mpq_class> substitution;
    bool swap_roles = false;  // substitute x instead of y, then rename y -> x
};

std::vector<SymbolicCheck> symbolic_checks() {
    std::vector<SymbolicCheck> out;
    const std::vector<std::pair<std::string, mpq_class>> y_values = {
        {"y13", mpq_class(1, 3)}, {"y25", mpq_class(2, 5)}, {"yneg2", mpq_class(-2)},
        {"y57", mpq_class(5, 7)}, {"yneg16", mpq_class(-1, 6)},
    };
    for (const auto& [tag, value] : y_values) {
        out.push_back(SymbolicCheck{"fe-F-" + tag,
                                    "Kummer F(x, " + mpq_class(value).get_str() + ") has zero tensor",
                                    Builtin::F,
                                    {{"y", value}},
                                    false});
        out.push_back(SymbolicCheck{"fe-F-swap-" + tag,
                                    "Kummer F(" + mpq_class(value).get_str() + ", y) has zero tensor",
                                    Builtin::F,
                                    {{"x", value}},
                                    true});
    }
    out.push_back(SymbolicCheck{"fe-G", "21-term weight-3 combination G(x) has zero tensor",
                                Builtin::G, {}, false});
    out.push_back(SymbolicCheck{"fe-sub1", "first structured sub-equation of G", Builtin::Sub1,
                                {}, false});
    out.push_back(SymbolicCheck{"fe-sub2", "second structured sub-equation of G", Builtin::Sub2,
                                {}, false});
    out.push_back(SymbolicCheck{"fe-sub3", "third structured sub-equation of G", Builtin::Sub3,
                                {}, false});
    out.push_back(SymbolicCheck{"fe-threeterm",
                                "three-term relation [x/(1-x)] + [(1-2x)/(1-x)] + [-x/(1-2x)] - [1]",
                                Builtin::ThreeTerm, {}, false});
    return out;
}

CheckReport run_symbolic(const SymbolicCheck& check) {
    CheckReport report;
    report.id = check.id;
    report.paper_ref = check.reference;
    report.precision_bits = 0;  // exact arithmetic
    FormalSum sum = builtin(check.which, check.substitution);
    if (check.swap_roles) {
        sum = FormalSum{[&] {
            std::vector<FormalTerm> renamed;
            for (const auto& t : sum.terms()) {
                renamed.push_back(FormalTerm{t.coeff, expr_rename(t.arg, {{"y", "x"}}),
                                             t.literal_one});
            }
            return renamed;
        }()};
    }
    const int m = (check.which == Builtin::H || check.which == Builtin::F) ? 4 : 3;
    const TensorElement tensor = tensor_invariant(sum, m);
    report.status = tensor.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
    report.residual_log10 = tensor.is_zero() ? kExactZeroResidual : 0;
    return report;
}

// ----------------------------------------------------- property suites ----

// Deterministic complex sample in the annulus 0.1 < |x| < 10, kept away
// from 0, 1 and the positive-real seam.
PrecComplex sample_point(std::mt19937_64& rng, mpfr_prec_t wp) {
    std::uniform_real_distribution<double> radius(-1.0, 1.0);   // log10 scale
    std::uniform_real_distribution<double> angle(0.05, 6.23);
    while (true) {
        const double r = std::pow(10.0, radius(rng));
        const double a = angle(rng);
        const double re = r * std::cos(a);
        const double im = r * std::sin(a);
        if (std::abs(im) < 1e-3) continue;
        if (std::hypot(re - 1.0, im) < 0.05) continue;
        return PrecComplex::of(re, im, wp);
    }
}

struct PropertySuite {
    std::string id;
    std::string reference;
    int tolerance_log10;
    mpfr_prec_t min_precision;
    std::function<PrecReal(mpfr_prec_t, std::uint64_t)> worst_residual;
};

std::vector<PropertySuite> property_suites() {
    std::vector<PropertySuite> out;

    out.push_back(PropertySuite{
        "inversion", "Dt_m(x) = (-1)^(m-1) Dt_m(1/x) on random points", -35, 192,
        [](mpfr_prec_t p, std::uint64_t seed) {
            const mpfr_prec_t wp = p + 64;
            std::mt19937_64 rng(seed);
            PrecReal worst = zero_at(wp);
            const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
            for (int m = 2; m <= 4; ++m) {
                for (int i = 0; i < 34; ++i) {
                    const PrecComplex x = sample_point(rng, wp);
                    PrecReal lhs = d_tilde(m, x, wp);
                    PrecReal rhs = d_tilde(m, one / x, wp);
                    if (m % 2 == 0) rhs = -rhs;
                    worst = max(worst, abs(lhs - rhs));
                }
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        "conjugation", "Dt_m(x) = (-1)^(m-1) Dt_m(conj x) on random points", -35, 192,
        [](mpfr_prec_t p, std::uint64_t seed) {
            const mpfr_prec_t wp = p + 64;
            std::mt19937_64 rng(seed + 1);
            PrecReal worst = zero_at(wp);
            for (int m = 2; m <= 4; ++m) {
                for (int i = 0; i < 34; ++i) {
                    const PrecComplex x = sample_point(rng, wp);
                    PrecReal lhs = d_tilde(m, x, wp);
                    PrecReal rhs = d_tilde(m, x.conj(), wp);
                    if (m % 2 == 0) rhs = -rhs;
                    worst = max(worst, abs(lhs - rhs));
                }
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        "real-vanish", "Dt_2 and Dt_4 vanish on the real line", -35, 192,
        [](mpfr_prec_t p, std::uint64_t seed) {
            const mpfr_prec_t wp = p + 64;
            std::mt19937_64 rng(seed + 2);
            std::uniform_real_distribution<double> dist(-8.0, 8.0);
            PrecReal worst = zero_at(wp);
            int done = 0;
            while (done < 100) {
                const double v = dist(rng);
                if (std::abs(v) < 1e-3 || std::abs(v - 1.0) < 1e-3) continue;
                ++done;
                const PrecReal x = PrecReal::of(v, wp);
                worst = max(worst, abs(d_tilde(2, x, wp)));
                worst = max(worst, abs(d_tilde(4, x, wp)));
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        "dist-relations", "Dt_m(x^N) = N^(m-1) sum_j Dt_m(x e^(2 pi i j/N)), N in {2,3}", -35, 192,
        [](mpfr_prec_t p, std::uint64_t seed) {
            const mpfr_prec_t wp = p + 64;
            std::mt19937_64 rng(seed + 3);
            PrecReal worst = zero_at(wp);
            for (int m = 2; m <= 4; ++m) {
                for (int n_parts : {2, 3}) {
                    for (int i = 0; i < 17; ++i) {
                        const PrecComplex x = sample_point(rng, wp);
                        worst = max(worst, check_distribution(m, n_parts, x, wp));
                    }
                }
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        "completeD2-points", "D_2(e^(i th)) + D_2(1-e^(i th)) = 0 on 100 angles", -35, 192,
        [](mpfr_prec_t p, std::uint64_t seed) {
            const mpfr_prec_t wp = p + 64;
            std::mt19937_64 rng(seed + 4);
            std::uniform_real_distribution<double> dist(0.02, 3.12);
            PrecReal worst = zero_at(wp);
            const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
            for (int i = 0; i < 100; ++i) {
                const PrecReal th = PrecReal::of(dist(rng), wp);
                const PrecComplex e = unit_circle(th);
                worst = max(worst, abs(d_classic(2, e, wp) + d_classic(2, one - e, wp)));
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        "seam", "disk formula and inversion agree on the unit circle", -35, 192,
        [](mpfr_prec_t p, std::uint64_t seed) {
            const mpfr_prec_t wp = p + 64;
            std::mt19937_64 rng(seed + 5);
            std::uniform_real_distribution<double> dist(0.05, 6.2);
            PrecReal worst = zero_at(wp);
            const PrecComplex one{PrecReal::of(1L, wp), PrecReal::of(0L, wp)};
            for (int m = 2; m <= 4; ++m) {
                for (int i = 0; i < 34; ++i) {
                    const PrecComplex x = unit_circle(PrecReal::of(dist(rng), wp));
                    PrecReal direct = d_tilde(m, x, wp);
                    PrecReal inverted = d_tilde(m, one / x, wp);
                    if (m % 2 == 0) inverted = -inverted;
                    worst = max(worst, abs(direct - inverted));
                }
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        "derivative-lemma", "d/dth Dt_m along the circle paths matches the closed forms", -20, 320,
        [](mpfr_prec_t p, std::uint64_t) {
            const mpfr_prec_t wp = p + 64;
            PrecReal worst = zero_at(wp);
            const double thetas[5] = {0.4, 0.9, 1.5708, 2.2, 2.8};
            for (int m = 3; m <= 4; ++m) {
                for (CirclePath path : {CirclePath::Exp, CirclePath::NegExp, CirclePath::OneMinusExp,
                                        CirclePath::OnePlusExp, CirclePath::Cayley,
                                        CirclePath::OneMinusExp2}) {
                    for (double th : thetas) {
                        worst = max(worst, derivative_residual(path, m, PrecReal::of(th, wp), wp));
                    }
                }
            }
            return worst;
        }});
    out.push_back(PropertySuite{
        // any nonzero excess is a violation, so only the exact-zero sentinel passes
        "tail-bounds", "|S_2N - S_N| <= certified tail bound(N) for N in {10, 20, 40}",
        kExactZeroResidual, 128,
        [](mpfr_prec_t p, std::uint64_t) {
            const mpfr_prec_t wp = p + 64;
            PrecReal worst = zero_at(wp);  // max bound violation; 0 when all hold
            for (SeriesVariant v : {SeriesVariant::Conj2A, SeriesVariant::Conj2B,
                                    SeriesVariant::Conj1A, SeriesVariant::Conj1B,
                                    SeriesVariant::Conj2Lhs, SeriesVariant::Conj1Lhs}) {
                for (unsigned long n : {10UL, 20UL, 40UL}) {
                    const PrecReal gap =
                        abs(apery_partial_sum(v, 2 * n, wp) - apery_partial_sum(v, n, wp));
                    const PrecReal excess = gap - apery_tail_bound(v, n, wp);
                    if (excess > 0L) worst = max(worst, excess);
                }
            }
            return worst;
        }});
    return out;
}

// -------------------------------------------------------------- dispatch --

CheckReport run_property(const PropertySuite& suite, const CheckOptions& options) {
    CheckReport report;
    report.id = suite.id;
    report.paper_ref = suite.reference;
    const mpfr_prec_t effective = std::max(options.precision_bits, suite.min_precision);
    report.precision_bits = effective;
    try {
        const PrecReal worst = suite.worst_residual(effective, options.seed);
        if (worst.is_zero()) {
            report.residual_log10 = kExactZeroResidual;
            report.status = CheckStatus::Pass;
        } else {
            PrecReal l10(64);
            mpfr_log10(l10.raw(), worst.raw(), MPFR_RNDN);
            report.residual_log10 = static_cast<int>(std::floor(l10.to_double()));
            report.status = report.residual_log10 < suite.tolerance_log10 ? CheckStatus::Pass
                                                                          : CheckStatus::Fail;
        }
    } catch (const std::exception& err) {
        report.status = CheckStatus::Error;
        report.detail = err.what();
    }
    return report;
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
    // iterative * / ? matcher
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::vector<std::string> registered_checks() {
    std::vector<std::string> ids;
    for (const auto& check : identity_registry()) ids.push_back(check.id);
    for (const auto& check : symbolic_checks()) ids.push_back(check.id);
    for (const auto& suite : property_suites()) ids.push_back(suite.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

CheckReport run_check(const std::string& id, const CheckOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    bool found = false;

    for (const auto& check : identity_registry()) {
        if (check.id == id) {
            report = identity_residual(id, options.precision_bits);
            found = true;
            break;
        }
    }
    if (!found) {
        for (const auto& check : symbolic_checks()) {
            if (check.id == id) {
                try {
                    report = run_symbolic(check);
                } catch (const std::exception& err) {
                    report.id = id;
                    report.paper_ref = check.reference;
                    report.status = CheckStatus::Error;
                    report.detail = err.what();
                }
                found = true;
                break;
            }
        }
    }
    if (!found) {
        for (const auto& suite : property_suites()) {
            if (suite.id == id) {
                report = run_property(suite, options);
                found = true;
                break;
            }
        }
    }
    if (!found) {
        report.id = id;
        report.status = CheckStatus::Error;
        report.detail = "unknown check id";
        report.precision_bits = options.precision_bits;
    }
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

std::vector<CheckReport> run_suite(const std::string& pattern, const CheckOptions& options) {
    std::vector<std::string> selected;
    for (const auto& id : registered_checks()) {
        if (glob_match(pattern, id)) selected.push_back(id);
    }
    std::vector<CheckReport> reports(selected.size());
    if (options.parallel && selected.size() > 1) {
        std::vector<std::future<CheckReport>> futures;
        futures.reserve(selected.size());
        for (const auto& id : selected) {
            futures.push_back(std::async(std::launch::async,
                                         [&options, id] { return run_check(id, options); }));
        }
        for (size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < selected.size(); ++i) reports[i] = run_check(selected[i], options);
    }
    return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.status == CheckStatus::Pass; });
}

int exit_code(const std::vector<CheckReport>& reports) {
    int code = 0;
    for (const auto& r : reports) {
        if (r.status == CheckStatus::Error) return 2;
        if (r.status == CheckStatus::Fail) code = std::max(code, 1);
    }
    return code;
}

std::string format_table(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    size_t idw = 8;
    for (const auto& r : reports) idw = std::max(idw, r.id.size());
    out << std::left;
    out.width(static_cast<std::streamsize>(idw + 2));
    out << "id";
    out << "status  log10(resid)  bits   ms     reference\n";
    for (const auto& r : reports) {
        out.width(static_cast<std::streamsize>(idw + 2));
        out << r.id;
        std::string status = to_string(r.status);
        status.resize(8, ' ');
        out << status;
        std::string resid = r.residual_log10 == kExactZeroResidual
                                ? "exact"
                                : std::to_string(r.residual_log10);
        resid.resize(14, ' ');
        out << resid;
        std::string bits = std::to_string(r.precision_bits);
        bits.resize(7, ' ');
        out << bits;
        std::string ms = std::to_string(r.elapsed_ms);
        ms.resize(7, ' ');
        out << ms;
        out << (r.status == CheckStatus::Error && !r.detail.empty() ? r.detail : r.paper_ref);
        out << "\n";
    }
    return out.str();
}

std::string format_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json item;
        item["id"] = r.id;
        item["paper_ref"] = r.paper_ref;
        item["status"] = to_string(r.status);
        item["residual_log10"] = r.residual_log10;
        item["precision_bits"] = static_cast<long>(r.precision_bits);
        item["elapsed_ms"] = r.elapsed_ms;
        if (!r.detail.empty()) item["detail"] = r.detail;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

}  // namespace plv
