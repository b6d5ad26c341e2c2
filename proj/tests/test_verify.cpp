#include <doctest.h>

#include <cstdlib>

#include "setgame/errors.hpp"
#include "setgame/verify.hpp"

using namespace setgame;

TEST_CASE("the full suite passes") {
    auto results = run_suite(all_check_ids());
    REQUIRE(results.size() == all_check_ids().size());
    for (const auto& r : results) {
        CAPTURE(r.check);
        CAPTURE(r.evidence.dump());
        CHECK(r.status != "fail");
    }
    // Every check leaves evidence behind.
    for (const auto& r : results) CHECK(!r.evidence.empty());
}

TEST_CASE("check order follows the dependency order of the suite") {
    auto ids = all_check_ids();
    REQUIRE(ids.size() == 15);
    CHECK(ids.front() == "hf-roundtrip");
    CHECK(ids[4] == "lemma6-oracle");
    CHECK(ids.back() == "class-level-reports");
}

TEST_CASE("class-level equivalences are reported, not judged") {
    auto results = run_suite({"class-level-reports"});
    REQUIRE(results.size() == 1);
    CHECK(results[0].status == "report-only");
}

TEST_CASE("unknown check ids are rejected") {
    CHECK_THROWS_AS(run_suite({"hf-roundtrip", "no-such-check"}), DomainError);
}

TEST_CASE("suite results are deterministic across runs and thread counts") {
    auto strip = [](std::vector<CheckResult> rs) {
        nlohmann::json j = nlohmann::json::array();
        for (auto& r : rs) j.push_back({{"check", r.check},
                                        {"status", r.status},
                                        {"evidence", std::move(r.evidence)}});
        return j;
    };
    auto base = strip(run_suite(all_check_ids()));
    setenv("SETGAME_THREADS", "1", 1);
    auto single = strip(run_suite(all_check_ids()));
    setenv("SETGAME_THREADS", "7", 1);
    auto seven = strip(run_suite(all_check_ids()));
    unsetenv("SETGAME_THREADS");
    CHECK(base == single);
    CHECK(base == seven);
}

TEST_CASE("report json carries per-check entries in dependency order") {
    // The suite always executes in its dependency order, whatever the
    // request order; theorem2-trend precedes lemma1-witness.
    auto results = run_suite({"lemma1-witness", "theorem2-trend"});
    auto j = report_json(results);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["check"] == "theorem2-trend");
    CHECK(j[1]["check"] == "lemma1-witness");
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0].contains("runtime_ms"));
    CHECK(j[0].contains("evidence"));
}
