#ifndef PLV_REPORT_HPP
#define PLV_REPORT_HPP

#include <mpfr.h>

#include <string>

namespace plv {

enum class CheckStatus { Pass, Fail, Error };

// residual_log10 value standing for an exact symbolic zero.
inline constexpr int kExactZeroResidual = -100000;

struct CheckReport {
    std::string id;
    std::string paper_ref;
    CheckStatus status = CheckStatus::Error;
    int residual_log10 = 0;
    mpfr_prec_t precision_bits = 0;
    long elapsed_ms = 0;
    std::string detail;  // diagnostic text for ERROR reports
};

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Error: return "ERROR";
    }
    return "?";
}

}  // namespace plv

#endif
