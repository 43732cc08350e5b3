#include <doctest.h>

#include <fstream>
#include <sstream>

#include <hesspoly/identities.hpp>
#include <hesspoly/report.hpp>

using namespace hesspoly;

TEST_CASE("report JSON is deterministic for a fixed seed") {
    RunConfig cfg;
    cfg.no_timing = true;
    cfg.seed = 123;
    Report a, b;
    a.config = cfg;
    b.config = cfg;
    a.results = identities::run_catalog("IG", cfg);
    b.results = identities::run_catalog("IG", cfg);
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("exit codes") {
    Report r;
    CheckResult ok;
    ok.id = "X-1";
    ok.status = Status::Pass;
    r.results = {ok};
    CHECK(report_exit_code(r) == 0);

    CheckResult ro_fail;
    ro_fail.id = "X-2";
    ro_fail.status = Status::Fail;
    ro_fail.report_only = true;
    r.results.push_back(ro_fail);
    CHECK(report_exit_code(r) == 0);  // report-only failures do not fail the run
    r.config.strict = true;
    CHECK(report_exit_code(r) == 1);  // unless strict
    r.config.strict = false;

    CheckResult hard;
    hard.id = "X-3";
    hard.status = Status::Fail;
    r.results.push_back(hard);
    CHECK(report_exit_code(r) == 1);
}

#ifdef HESSPOLY_GOLDEN_DIR
TEST_CASE("full catalog report matches the golden file") {
    RunConfig cfg;
    cfg.no_timing = true;
    cfg.seed = 20260810;
    Report r;
    r.config = cfg;
    r.results = identities::run_catalog("all", cfg);
    std::ifstream f(std::string(HESSPOLY_GOLDEN_DIR) + "/catalog_report.json");
    REQUIRE(f.good());
    std::stringstream golden;
    golden << f.rdbuf();
    CHECK(report_json(r) == golden.str());
}
#endif

TEST_CASE("summary counts") {
    Report r;
    CheckResult a, b, c;
    a.status = Status::Pass;
    b.status = Status::Skipped;
    c.status = Status::Fail;
    c.report_only = true;
    r.results = {a, b, c};
    Summary s = r.summary();
    CHECK(s.pass == 1);
    CHECK(s.skipped == 1);
    CHECK(s.fail == 0);
    CHECK(s.report_only_fail == 1);
}
