#include "syzlab/verify.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace syz;
using namespace syz::verify;

namespace {

const Report& full_report()
{
    static const Report r = verify_all(Config{});
    return r;
}

}  // namespace

TEST_CASE("every criterion appears exactly once, in order")
{
    const auto& r = full_report();
    REQUIRE(r.checks.size() == criterion_count);
    std::set<int> ids;
    for (std::size_t k = 0; k < r.checks.size(); ++k) {
        CHECK(r.checks[k].id == static_cast<int>(k) + 1);
        ids.insert(r.checks[k].id);
        CHECK_FALSE(r.checks[k].title.empty());
        CHECK_FALSE(r.checks[k].citation.empty());
        CHECK(r.checks[k].status != Status::Skipped);
        if (r.checks[k].status == Status::Pass)
            for (const auto& it : r.checks[k].items)
                CHECK(it.ok);
    }
    CHECK(ids.size() == criterion_count);
}

TEST_CASE("skipping numeric checks still runs the symbolic ones")
{
    Config cfg;
    cfg.skip = Category::Numeric;
    const Report r = verify_all(cfg);
    REQUIRE(r.checks.size() == criterion_count);
    int skipped = 0;
    for (const auto& c : r.checks) {
        if (c.category == Category::Numeric) {
            CHECK(c.status == Status::Skipped);
            CHECK(c.items.empty());
            CHECK(c.skip_reason.find("numeric") != std::string::npos);
            ++skipped;
        } else {
            CHECK(c.status != Status::Skipped);
            CHECK_FALSE(c.items.empty());
        }
    }
    CHECK(skipped > 0);
    CHECK(skipped < criterion_count);
}

TEST_CASE("a corrupted reference table fails with a per-entry diff")
{
    Config cfg;
    E2Table bad = golden_E2(E2Target::Mirror);
    bad.e[1][2] += 7;
    cfg.mirror_golden_override = bad;
    const CheckResult c = run_criterion(5, cfg);
    CHECK(c.status == Status::Fail);
    bool diff = false;
    for (const auto& n : c.notes)
        diff |= n.find("entry (p=1, q=2): expected " + std::to_string(bad.at(1, 2))) != std::string::npos;
    CHECK(diff);

    cfg.mirror_golden_override.reset();
    CHECK(run_criterion(5, cfg).status == Status::Pass);
}

TEST_CASE("JSON report layout")
{
    const Json j = to_json(full_report(), false);
    CHECK(j["schema_version"] == schema_version);
    CHECK(j["checks"].size() == criterion_count);
    CHECK(j["config"]["seed"] == 2024);
    CHECK(j["counts"]["pass"].get<int>() + j["counts"]["fail"].get<int>() + j["counts"]["skipped"].get<int>() ==
          criterion_count);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("items"));
        CHECK_FALSE(c.contains("runtime_s"));
    }
    const Json timed = to_json(full_report(), true);
    CHECK(timed["checks"][0].contains("runtime_s"));
    CHECK(j["status"] == (full_report().passed() ? "pass" : "fail"));
}

TEST_CASE("identical configurations give byte-identical JSON")
{
    const std::string a = to_json(verify_all(Config{}), false).dump(2);
    Config threaded;
    threaded.threads = 3;
    const std::string b = to_json(verify_all(threaded), false).dump(2);
    CHECK(a == b);
    CHECK(a == to_json(full_report(), false).dump(2));
}

TEST_CASE("text renderings")
{
    const auto& r = full_report();
    std::istringstream summary(render_summary(r));
    std::string line;
    int lines = 0;
    while (std::getline(summary, line)) {
        ++lines;
        CHECK(line.rfind("criterion " + std::to_string(lines) + ": ", 0) == 0);
    }
    CHECK(lines == criterion_count);
    const std::string text = render_text(r, false);
    CHECK(text.find("overall: ") != std::string::npos);
    CHECK(text.find("[PASS] 1. ") != std::string::npos);
}

TEST_CASE("category names")
{
    CHECK(category_from_string("numeric") == Category::Numeric);
    CHECK(category_from_string("symbolic") == Category::Symbolic);
    CHECK_THROWS(category_from_string("other"));
    CHECK(to_string(Status::Skipped) == "skipped");
}
