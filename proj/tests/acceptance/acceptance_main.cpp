// Acceptance suite: runs every verification criterion on the default grids
// and prints one line per criterion.  Exits nonzero when anything fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gharm/verify.hpp"

namespace {

const char* criterion_titles[] = {
    "",
    "transform pairs against closed forms",
    "Parseval constant",
    "derivative symbol",
    "round trips",
    "tanh-family inverse decomposition",
    "manufactured solutions, four families",
    "non-ellipticity gating",
    "Cauchy singular operator vs pv quadrature",
    "convolution theorem and Young bound",
    "algebraic kernel identities",
};

} // namespace

int main() {
    const auto results = gharm::run_acceptance_checks();

    std::printf("%-36s %14s %14s %10s  %s\n", "check", "expected", "got", "tolerance", "status");
    std::map<int, std::pair<int, int>> per_criterion; // criterion -> {passed, total}
    for (const auto& r : results) {
        const double expected = r.kind == gharm::CheckResult::Kind::max_error ? 0.0 : r.expected;
        std::printf("%-36s %14.6g %14.6g %10.2g  %s\n", r.name.c_str(), expected, r.got, r.tol,
                    r.pass ? "pass" : "FAIL");
        auto& [passed, total] = per_criterion[r.criterion];
        passed += r.pass ? 1 : 0;
        total += 1;
    }

    std::printf("\n");
    bool all_pass = true;
    for (const auto& [criterion, counts] : per_criterion) {
        const bool ok = counts.first == counts.second;
        all_pass = all_pass && ok;
        std::printf("criterion %2d [%s]: %s (%d/%d checks)\n", criterion,
                    criterion_titles[criterion], ok ? "PASS" : "FAIL", counts.first,
                    counts.second);
    }
    return all_pass ? 0 : 1;
}
