#pragma once

#include "syzlab/sheafcoh.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syz::verify {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum class Status { Pass, Fail, Skipped };
enum class Category { Symbolic, Numeric };

std::string to_string(Status s);
std::string to_string(Category c);
Category category_from_string(const std::string& s);

struct Item {
    std::string name;
    Json expected;
    Json computed;
    bool ok = false;
};

struct CheckResult {
    int id = 0;
    std::string title;
    std::string citation;
    Category category = Category::Symbolic;
    Status status = Status::Pass;
    std::string skip_reason;
    std::vector<Item> items;
    std::vector<std::string> notes;  // diffs and diagnostics
    double runtime_s = 0;
    double budget_s = 0;  // 0: no runtime requirement
};

struct Config {
    double psi = 10;
    double tol = 1e-10;  // integrator tolerance
    int samples = 512;   // Harvey-Lawson probe samples
    std::uint64_t seed = 2024;
    std::optional<Category> skip;
    unsigned threads = 0;
    // Test hook: replaces the reference tables for the Leray check.
    std::optional<E2Table> quintic_golden_override;
    std::optional<E2Table> mirror_golden_override;
};

struct Report {
    Config config;
    std::vector<CheckResult> checks;
    bool passed() const;
};

inline constexpr int criterion_count = 12;

CheckResult run_criterion(int id, const Config& cfg);
Report verify_all(const Config& cfg);

Json config_json(const Config& cfg);
Json to_json(const CheckResult& c, bool timings);
Json to_json(const Report& r, bool timings);
std::string render_text(const Report& r, bool timings);
// One "criterion N: PASS|FAIL|SKIPPED title" line per check.
std::string render_summary(const Report& r);

}  // namespace syz::verify
