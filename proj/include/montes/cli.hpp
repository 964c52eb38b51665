#pragma once

#include "montes/monogen.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace montes {

/// One row of a parameter scan, in (u, v, t, m) order.
struct ScanRow {
    int u, v, t;
    Int m;
    long n;
    bool maximal;
    VerdictKind kind;
    std::vector<std::string> rules;        // matched congruence rule ids
    std::optional<RuleHit> witness;        // first engine-certified witness
};

struct ScanResult {
    std::vector<ScanRow> rows;
    long skipped = 0;  // non-square-free (or unfactorable) m values
    long maximal = 0, nonmonogenic = 0, undecided = 0;
};

/// Classify every valid m in [from, to].  Worker count changes only the
/// wall time, never the result.
ScanResult scan_range(const Int& from, const Int& to, int u, int v, int t,
                      Variant variant, int jobs);

std::string scan_csv(const ScanResult& result);
nlohmann::json scan_json(const ScanResult& result);

/// Full command-line surface; returns the process exit code.
/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace montes
