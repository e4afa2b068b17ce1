#include <doctest.h>

#include "vmodel/io.hpp"
#include "vmodel/suite.hpp"

using namespace vmodel;

TEST_CASE("check seeds differ by name and follow the run seed")
{
    CHECK(check_seed(7, "a") != check_seed(7, "b"));
    CHECK(check_seed(7, "a") != check_seed(8, "a"));
    CHECK((check_seed(7, "a") ^ check_seed(8, "a")) == (7 ^ 8));
    // FNV-1a of the empty string is the offset basis.
    CHECK(check_seed(0, "") == 14695981039346656037ULL);
}

TEST_CASE("reports are sorted and reproducible")
{
    auto a = run_suite(Scale::smoke, 3, {}, "suite --scale smoke --seed 3");
    auto b = run_suite(Scale::smoke, 3, {}, "suite --scale smoke --seed 3");
    CHECK(a.passed());
    CHECK(a.text() == b.text());
    CHECK(a.json() == b.json());
    for (std::size_t i = 1; i < a.checks.size(); ++i)
        CHECK(a.checks[i - 1].name < a.checks[i].name);
    auto j = Json::parse(a.json());
    CHECK(j["seed"] == 3);
    CHECK(j["scale"] == "smoke");
    CHECK(j["checks"].size() == a.checks.size());
    CHECK(a.text().rfind("command: suite --scale smoke --seed 3\n", 0) == 0);
}

TEST_CASE("different seeds draw different instances")
{
    auto a = checks::engine_equivalence(1, 20, {0, 4, 5, true}, 2, {});
    auto b = checks::engine_equivalence(2, 20, {0, 4, 5, true}, 2, {});
    CHECK(a.passed);
    CHECK(b.passed);
    CHECK(a.instances == 20);
}

TEST_CASE("an injected fault is detected")
{
    checks::Config config;
    config.inject_fault = true;
    auto r = checks::engine_equivalence(1, 20, {0, 4, 5, true}, 2, config);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("contract") != std::string::npos);
}

TEST_CASE("scale names")
{
    CHECK(parse_scale("smoke") == Scale::smoke);
    CHECK(parse_scale("desk") == Scale::desk);
    CHECK_FALSE(parse_scale("Desk"));
    CHECK(to_string(Scale::desk) == "desk");
}
