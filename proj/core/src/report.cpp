#include "hopfaz/report.hpp"

namespace hopfaz {

bool Report::all_passed() const
{
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* Report::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed) return c.name;
    return {};
}

void Report::add(std::string name, bool passed, std::string witness)
{
    checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
}

void Report::append(const Report& other, const std::string& prefix)
{
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
}

} // namespace hopfaz
