#pragma once

#include <string>
#include <vector>

namespace hopfaz {

/// Outcome of one named exhaustive check. `witness` names the first failing
/// basis tuple (or the failure reason) and is empty on success.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
    /// Check name of the first failure, or empty.
    std::string first_failure() const;
    void add(std::string name, bool passed, std::string witness = {});
    void append(const Report& other, const std::string& prefix = {});

    friend bool operator==(const Report&, const Report&) = default;
};

} // namespace hopfaz
