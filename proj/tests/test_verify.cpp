#include "doctest.h"

#include <algorithm>

#include "lhist/bijection.hpp"
#include "lhist/verify.hpp"

using namespace lhist;

TEST_CASE("registry") {
    const std::vector<std::string> names = check_names();
    for (const char* expected :
         {"CARDINALITY", "PHI_BIJECTION", "PHI_STATS", "HEIGHT_CLAIM", "INV_DECOMP", "PSI_STATS",
          "ACTION_EXPANSION", "THM_MAIN_GAMMA", "THM_SHIN_ZENG", "EQUIDISTRIBUTION", "TANGENT",
          "DE_LISTS"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
    CHECK_THROWS_AS(run_check("NO_SUCH_CHECK", 4), UnknownCheck);
    CHECK_THROWS_AS(run_check("CARDINALITY", 0), SizeTooLarge);
    CHECK_THROWS_AS(run_check("CARDINALITY", 10), SizeTooLarge);
}

TEST_CASE("individual checks pass at small sizes") {
    CHECK(run_check("DE_LISTS", 5).pass);
    CHECK(run_check("PHI_BIJECTION", 1).pass);
    CHECK(run_check("THM_MAIN_GAMMA", 6).pass);
    CHECK(run_check("CARDINALITY", 5).pass);
    CHECK(run_check("TANGENT", 5).pass);
}

TEST_CASE("run_all") {
    const std::vector<CheckReport> reports = run_all(4);
    CHECK(reports.size() == check_names().size());
    for (const CheckReport& r : reports) {
        CHECK(r.pass);
        CHECK(!r.counterexample.has_value());
    }
    // degenerate sizes
    for (const CheckReport& r : run_all(1)) CHECK(r.pass);
    // parallel run agrees
    const std::vector<CheckReport> par = run_all(4, 4);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(par[i].check_name == reports[i].check_name);
        CHECK(par[i].pass == reports[i].pass);
    }
}

TEST_CASE("harness can fail: corrupted phi mu") {
    set_phi_mu_corruption(true);
    const CheckReport r = run_check("PHI_STATS", 4);
    set_phi_mu_corruption(false);
    CHECK(!r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK(!r.counterexample->input.empty());
    CHECK(r.counterexample->expected != r.counterexample->actual);
}

TEST_CASE("report JSON") {
    const CheckReport r = run_check("DE_LISTS", 5);
    const nlohmann::json j = to_json(r);
    CHECK(j.at("check") == "DE_LISTS");
    CHECK(j.at("status") == "PASS");
    CHECK(j.contains("elapsed_seconds"));

    const std::string table = summary_table({r});
    CHECK(table.find("PASS") != std::string::npos);
    CHECK(table.find("DE_LISTS") != std::string::npos);
}
