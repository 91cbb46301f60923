/*
 * verify.hpp — the cross-engine verification harness: every analytic-vs-
 * oracle comparison, the printed-formula arbitrations, and the reference-
 * table reproduction, emitted as a machine-readable report.
 */
#pragma once

#include <string>
#include <vector>

namespace hybrid {

enum class ToleranceProfile { strict, standard };

struct CheckResult {
    std::string name;
    std::string status; // pass | fail | discrepancy-documented
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    double runtime_ms = 0.0;
    std::string note; // adopted readings, documented discrepancies
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    int count(const std::string& status) const;
    bool has_failures() const { return count("fail") > 0; }
};

// Number of registered checks (report completeness invariant).
int registered_check_count();

// Runs the full check list in registration order; `only_prefix` filters by
// check-name prefix (empty = all).
VerificationReport run_all(ToleranceProfile profile,
                           const std::string& only_prefix = "");

// One record per check (name/status/measured/expected/tolerance/runtime_ms)
// plus a trailing summary line.
std::string report_to_text(const VerificationReport& report);

// Inverse of report_to_text up to runtime_ms (parsed verbatim).
VerificationReport parse_report(const std::string& text);

} // namespace hybrid
