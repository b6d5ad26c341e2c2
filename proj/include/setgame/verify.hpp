#pragma once

// Self-audit suite: each check recomputes an announced result by an
// independent route (closed form vs enumeration, solver vs per-code
// classification, exhaustive vs constructed witnesses) and reports
// machine-checkable evidence. Class-level statements that a finite run can
// only sample are reported, not judged.

#include <string>
#include <vector>

#include <json.hpp>

namespace setgame {

struct CheckResult {
    std::string check;
    std::string status;  // "pass" | "fail" | "report-only"
    long long runtime_ms = 0;
    nlohmann::json evidence;
};

// Check ids in dependency order (prefix-coherent: earlier checks validate
// machinery later ones rely on).
std::vector<std::string> all_check_ids();

// Runs the requested checks in canonical order. Throws DomainError on an
// unknown id. Evidence (everything except runtime_ms) is identical across
// runs and thread counts.
std::vector<CheckResult> run_suite(const std::vector<std::string>& ids);

nlohmann::json report_json(const std::vector<CheckResult>& results);

}  // namespace setgame
