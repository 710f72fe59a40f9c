#ifndef PLV_CHECKS_HPP
#define PLV_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plv/report.hpp"

namespace plv {

struct CheckOptions {
    mpfr_prec_t precision_bits = 256;
    std::uint64_t seed = 0x5eed2026;  // drives the randomized property suites
    bool parallel = false;
};

// All check ids: the numeric identity registry, the symbolic functional
// equation checks (fe-*), and the randomized relation suites.
std::vector<std::string> registered_checks();

// Runs one check.  Mathematical failure is reported as FAIL, never thrown;
// unknown ids give an ERROR report.
CheckReport run_check(const std::string& id, const CheckOptions& options = {});

// Runs every check matching the glob pattern (* and ? wildcards), ordered by
// id; with options.parallel the checks run concurrently.
std::vector<CheckReport> run_suite(const std::string& pattern, const CheckOptions& options = {});

bool glob_match(const std::string& pattern, const std::string& text);
bool all_passed(const std::vector<CheckReport>& reports);

std::string format_table(const std::vector<CheckReport>& reports);
std::string format_json(const std::vector<CheckReport>& reports);

// Exit code contract: 0 all pass, 1 any FAIL, 2 any ERROR.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace plv

#endif
