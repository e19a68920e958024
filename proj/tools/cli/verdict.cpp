#include "cli/verdict.hpp"

#include <sstream>

#include "cli/document.hpp"

namespace hopfaz::cli {

void VerdictReport::add_report(const Report& r, const std::string& prefix)
{
    for (const auto& c : r.checks) checks.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.witness});
}

bool VerdictReport::all_checks_passed() const
{
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

Json to_json(const VerdictReport& r)
{
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = r.command;
    j["input"] = r.input;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["determinants"] = Json::object();
    for (const auto& [k, v] : r.determinants) j["determinants"][k] = v;
    j["routes"] = Json::object();
    for (const auto& [k, v] : r.routes) j["routes"][k] = v;
    j["verdict"] = r.verdict;
    j["exit_code"] = r.exit_code;
    j["timing_us"] = r.timing_us;
    j["extra"] = r.extra;
    return j;
}

namespace {

const Json& need(const Json& j, const std::string& ptr, const std::string& key, Json::value_t type)
{
    if (!j.contains(key)) throw DocumentError(ptr, "missing required member '" + key + "'");
    const Json& v = j.at(key);
    bool ok = v.type() == type || (type == Json::value_t::number_integer && v.is_number_unsigned());
    if (!ok) throw DocumentError(ptr + "/" + key, std::string("expected ") + Json(type).type_name());
    return v;
}

} // namespace

VerdictReport report_from_json(const Json& j)
{
    using T = Json::value_t;
    if (!j.is_object()) throw DocumentError("", "expected an object");
    if (need(j, "", "schema", T::string) != kReportSchema)
        throw DocumentError("/schema", std::string("expected \"") + kReportSchema + "\"");
    VerdictReport r;
    r.command = need(j, "", "command", T::string).get<std::string>();
    r.input = need(j, "", "input", T::object);
    const Json& checks = need(j, "", "checks", T::array);
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string p = "/checks/" + std::to_string(i);
        if (!checks[i].is_object()) throw DocumentError(p, "expected an object");
        r.checks.push_back({need(checks[i], p, "name", T::string).get<std::string>(),
                            need(checks[i], p, "passed", T::boolean).get<bool>(),
                            need(checks[i], p, "witness", T::string).get<std::string>()});
    }
    for (const auto& [k, v] : need(j, "", "determinants", T::object).items()) {
        if (!v.is_string()) throw DocumentError("/determinants/" + k, "expected string");
        r.determinants[k] = v.get<std::string>();
    }
    for (const auto& [k, v] : need(j, "", "routes", T::object).items()) {
        if (!v.is_boolean()) throw DocumentError("/routes/" + k, "expected boolean");
        r.routes[k] = v.get<bool>();
    }
    r.verdict = need(j, "", "verdict", T::string).get<std::string>();
    r.exit_code = need(j, "", "exit_code", T::number_integer).get<int>();
    r.timing_us = need(j, "", "timing_us", T::number_integer).get<std::int64_t>();
    r.extra = need(j, "", "extra", T::object);
    return r;
}

std::string render_text(const VerdictReport& r)
{
    std::ostringstream out;
    out << r.command << ": " << r.verdict << " (exit " << r.exit_code << ")\n";
    for (const auto& [k, v] : r.determinants) out << "  det " << k << " = " << v << "\n";
    for (const auto& [k, v] : r.routes) out << "  route " << k << ": " << (v ? "azumaya" : "not azumaya") << "\n";
    for (const char* key : {"rsigma", "sigma"}) {
        if (!r.extra.contains(key)) continue;
        for (const auto& row : r.extra.at(key))
            out << "  " << (row.value("match", false) ? "ok   " : "MISS ") << row.value("family", "") << " at ("
                << row.value("left", "") << ", " << row.value("right", "") << ") = " << row.value("computed", "")
                << " [closed form " << row.value("expected", "") << "]\n";
    }
    if (r.extra.contains("summary"))
        for (const auto& [k, v] : r.extra.at("summary").items()) out << "  " << k << ": " << v.dump() << "\n";
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        if (c.passed) continue;
        ++failed;
        out << "  FAIL " << c.name << (c.witness.empty() ? "" : " [" + c.witness + "]") << "\n";
    }
    if (!r.checks.empty()) out << "  checks: " << r.checks.size() - failed << "/" << r.checks.size() << " passed\n";
    return out.str();
}

} // namespace hopfaz::cli
