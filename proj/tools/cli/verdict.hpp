#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfaz/report.hpp"
#include "json.hpp"

namespace hopfaz::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hopfaz/verdict-report/v1";

enum ExitCode : int { exit_azumaya = 0, exit_not_azumaya = 1, exit_input_error = 2, exit_disagreement = 3 };

/// Machine-readable outcome of one CLI command.
struct VerdictReport {
    std::string command;
    Json input = Json::object();
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> determinants;
    /// Per-route Azumaya verdicts.
    std::map<std::string, bool> routes;
    std::string verdict;
    int exit_code = exit_input_error;
    std::int64_t timing_us = 0;
    Json extra = Json::object();

    void add_report(const Report& r, const std::string& prefix);
    bool all_checks_passed() const;

    friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

Json to_json(const VerdictReport& r);
/// Throws DocumentError with a JSON pointer on malformed input.
VerdictReport report_from_json(const Json& j);

/// Human-readable rendering for the non-JSON mode.
std::string render_text(const VerdictReport& r);

} // namespace hopfaz::cli
