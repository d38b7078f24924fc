#pragma once

/* Scenario files and report rendering for the batch verifier.
 *
 * A scenario is a JSON document selecting suites, a truncation bound for
 * the boundary modules, an optional axiom registry replacing the default
 * one, and an output path.  Reports are JSON with a fixed key order and
 * integer or string values only, so identical scenarios produce
 * byte-identical reports.
 */

#include "pms/suites.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pms {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Scenario {
    std::vector<std::string> suites;  /* validated suite names, never empty */
    int truncation_bound = 3;
    AxiomRegistry axioms;
    std::string out = "report.json";

    Scenario();
};

/* Parse a scenario document; unknown keys are rejected, unknown suite
 * names raise UnknownSuite, malformed JSON or mistyped fields raise
 * ParseError.  A truncation bound below the l2 minimum parses fine and
 * fails later inside the affected checks. */
Scenario parse_scenario(const std::string& text);

Scenario load_scenario_file(const std::string& path);

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
};

struct RunResult {
    std::vector<SuiteReport> suites;
    int pass = 0;
    int fail = 0;
    int bounded = 0;
    int exit_code() const { return fail == 0 ? 0 : 1; }
};

/* Run the scenario's suites restricted to the given selection ("all"
 * keeps the scenario's own list). */
RunResult run_scenario(const Scenario& sc, const std::string& selection);

/* Deterministic JSON text of the report, trailing newline included. */
std::string render_report(const Scenario& sc, const RunResult& rr);

}  // namespace pms
