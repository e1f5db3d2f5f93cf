#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gharm/grid.hpp"

namespace gharm {

/// One verification check.  Three comparison kinds:
///   max_error:  got is an error magnitude, passes when got <= tol
///   near_value: got should equal expected, passes when |got-expected| <= tol
///   at_most:    got should not exceed expected (+tol slack)
struct CheckResult {
    int criterion = 0;
    std::string name;
    enum class Kind { max_error, near_value, at_most } kind = Kind::max_error;
    double expected = 0.0;
    double got = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyConfig {
    LineGrid grid = default_line_grid();
    FreqGrid freqs = default_freq_grid();
    /// When set, only checks whose name contains one of the strings run;
    /// an empty list selects nothing.
    std::optional<std::vector<std::string>> filter;
};

/// Runs the analytic-oracle and property suite (10 criteria).  Results come
/// back in criterion order.
std::vector<CheckResult> run_acceptance_checks(const VerifyConfig& cfg = {});

} // namespace gharm
