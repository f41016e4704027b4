#include "syzlab/verify.hpp"

#include <iomanip>
#include <sstream>

namespace syz::verify {

Json config_json(const Config& cfg)
{
    Json j;
    j["psi"] = cfg.psi;
    j["tol"] = cfg.tol;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["skip"] = cfg.skip ? Json(to_string(*cfg.skip)) : Json(nullptr);
    j["golden_override"] = cfg.quintic_golden_override.has_value() || cfg.mirror_golden_override.has_value();
    return j;
}

Json to_json(const CheckResult& c, bool timings)
{
    Json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["citation"] = c.citation;
    j["category"] = to_string(c.category);
    j["status"] = to_string(c.status);
    if (c.status == Status::Skipped)
        j["skip_reason"] = c.skip_reason;
    Json items = Json::array();
    for (const auto& it : c.items)
        items.push_back({{"name", it.name}, {"expected", it.expected}, {"computed", it.computed}, {"ok", it.ok}});
    j["items"] = items;
    j["notes"] = c.notes;
    if (c.budget_s > 0)
        j["runtime_budget_s"] = c.budget_s;
    if (timings)
        j["runtime_s"] = c.runtime_s;
    return j;
}

Json to_json(const Report& r, bool timings)
{
    Json j;
    j["schema_version"] = schema_version;
    j["config"] = config_json(r.config);
    j["status"] = r.passed() ? "pass" : "fail";
    int pass = 0, fail = 0, skipped = 0;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        pass += c.status == Status::Pass;
        fail += c.status == Status::Fail;
        skipped += c.status == Status::Skipped;
        checks.push_back(to_json(c, timings));
    }
    j["counts"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    j["checks"] = checks;
    return j;
}

namespace {

std::string upper(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

std::string compact(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

}  // namespace

std::string render_summary(const Report& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << "criterion " << c.id << ": " << upper(c.status) << "  " << c.title;
        if (c.status == Status::Skipped)
            os << " (" << c.skip_reason << ")";
        os << "\n";
    }
    return os.str();
}

std::string render_text(const Report& r, bool timings)
{
    std::ostringstream os;
    const auto cfg = config_json(r.config);
    os << "verification report (schema " << schema_version << ")\n";
    os << "config: " << cfg.dump() << "\n\n";
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& c : r.checks) {
        pass += c.status == Status::Pass;
        fail += c.status == Status::Fail;
        skipped += c.status == Status::Skipped;
        os << "[" << upper(c.status) << "] " << c.id << ". " << c.title << " (" << to_string(c.category) << ")";
        if (timings) {
            os << std::fixed << std::setprecision(3) << "  " << c.runtime_s << " s";
            if (c.budget_s > 0)
                os << " / budget " << std::defaultfloat << c.budget_s << " s";
            os << std::defaultfloat;
        }
        os << "\n    " << c.citation << "\n";
        if (c.status == Status::Skipped) {
            os << "    skipped: " << c.skip_reason << "\n";
            continue;
        }
        for (const auto& it : c.items) {
            os << "    " << (it.ok ? "ok  " : "BAD ") << it.name << "\n";
            os << "          expected " << compact(it.expected) << "\n";
            os << "          computed " << compact(it.computed) << "\n";
        }
        for (const auto& n : c.notes)
            os << "    note: " << n << "\n";
    }
    os << "\noverall: " << (r.passed() ? "PASS" : "FAIL") << " (" << pass << " pass, " << fail << " fail, " << skipped
       << " skipped)\n";
    return os.str();
}

}  // namespace syz::verify
