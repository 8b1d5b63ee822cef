#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace vcell::cli {

struct CheckResult {
    std::string name;
    std::string anchor;  // what the check is tied to
    std::string computed;
    std::string reference;
    std::string tolerance;  // "exact" for exact checks
    std::string abs_error;
    std::string rel_error;
    bool exact = false;
    bool passed = false;
};

// Invariant suite behind `verify`; quick keeps the desk-scale subset.
std::vector<CheckResult> run_checks(bool quick);
nlohmann::json emit_report(const std::vector<CheckResult>& results, const nlohmann::json& config);

// Exit codes: 0 success, 1 computation error or failed verify, 2 bad usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vcell::cli
