#pragma once

/* Check suites: each suite runs a fixed list of named checks and returns
 * structured results for the report.  A check never throws: internal
 * errors (including TruncationTooSmall from an out-of-range bound) are
 * captured as failed checks so the front-end can surface them with a
 * nonzero exit code.
 */

#include "pms/curve_coh.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pms {

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { Pass, Fail, Bounded };

std::string status_str(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Fail;
    std::string claim;
    std::string citation;
    /* Ordered key/value rows; rendering preserves this order. */
    std::vector<std::pair<std::string, std::string>> witness;
    std::vector<std::string> axioms_used;
};

struct SuiteConfig {
    int truncation = 3;
    AxiomRegistry axioms;

    SuiteConfig() : axioms(default_axioms()) {}
};

const std::vector<std::string>& suite_names();

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace pms
