#pragma once

// Every cross-check of the library in one report: closed forms against brute
// force, analytic eigenvalues against the eigensolver, trace and invariance
// checks, and the known fixed-end/periodic mismatch of the N = 3 lattice.

#include <string>
#include <vector>

#include "zeromode/sweep.hpp"

namespace zeromode {

enum class CheckStatus { pass, fail, divergent_as_expected };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string comparison;  // "<=" or ">": how measured relates to tolerance on success
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
    double wall_seconds = 0.0;
};

struct RunReport {
    std::vector<CheckResult> checks;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

struct OracleOptions {
    // Added to the closed-form xi(R) before it is compared with independent
    // routes. Nonzero values exist to prove the comparisons can fail.
    double xi_perturbation = 0.0;
    unsigned jobs = 1;
};

std::vector<std::string> registered_checks();

RunReport run_oracle_suite(const OracleOptions& opts = {});

// Tabular form for the CLI writers. Wall times only when `timings` is set so
// that default output is byte-identical between runs.
SweepOutput report_output(const RunReport& r, bool timings);

}  // namespace zeromode
