#include <doctest.h>

#include <random>

#include "twc/errors.hpp"
#include "twc/scenarios.hpp"
#include "twc/suite.hpp"

using namespace twc;

TEST_CASE("check id registry") {
    const auto& ids = suite_check_ids();
    CHECK(ids.size() == 12);
    CHECK_THROWS_AS(run_suite({"no-such-check"}), ParseError);
    CHECK_THROWS_AS(run_suite({"tbft"}, "NoSuchGroup"), ParseError);
}

TEST_CASE("single group spot checks pass") {
    SuiteResult r = run_suite({"corpus-valid", "lemma-shift", "lemma5-orbit-stabilizer"}, "S3");
    CHECK(r.all_passed());
    bool saw_pass = false;
    for (const auto& rep : r.reports) {
        CHECK(rep.verdict != "fail");
        if (rep.verdict == "pass") saw_pass = true;
    }
    CHECK(saw_pass);
}

TEST_CASE("spectral checks on one group") {
    SuiteResult r = run_suite({"tbft", "brauer", "char-orthogonality"}, "SL23");
    CHECK(r.all_passed());
}

TEST_CASE("lattice round trip is seed stable") {
    SuiteResult a = run_suite({"zk-roundtrip"}, "", 42);
    SuiteResult b = run_suite({"zk-roundtrip"}, "", 42);
    CHECK(a.all_passed());
    REQUIRE(a.reports.size() == b.reports.size());
    for (size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].scope == b.reports[i].scope);
        CHECK(a.reports[i].detail == b.reports[i].detail);
    }
}

TEST_CASE("solvability of scenario closures") {
    const auto& lamp5 = bundled_scenario("lamp5_times2");
    SolvabilityReport rep = solvability_check(lamp5.phi);
    CHECK(rep.scenario_based);
    CHECK(rep.closure_order == 5);
    CHECK(rep.induced_fixed_trivial);
    CHECK(rep.closure_solvable);
    CHECK(rep.closure_derived_length == 1);
    CHECK(rep.base_solvable);

    const auto& a5 = bundled_scenario("wreath_a5");
    SolvabilityReport ns = solvability_check(a5.phi);
    CHECK_FALSE(ns.induced_fixed_trivial);
    CHECK_FALSE(ns.base_solvable);

    SolvabilityReport grp = solvability_check_group(corpus_group("S4"));
    CHECK_FALSE(grp.scenario_based);
    CHECK(grp.base_solvable);
    CHECK(grp.base_derived_length == 3);
}

TEST_CASE("random finite order matrices have finite order") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 60; ++i) {
        int k = 1 + i % 4;
        IntMatrix d = random_finite_order_unimodular(rng, k);
        CHECK(d.k == k);
        auto ord = matrix_order(d);
        REQUIRE(ord.has_value());
        CHECK(*ord >= 1);
        CHECK(*ord <= 12);
        CheckReport rep = zk_roundtrip_check(d, 1000 + i);
        CHECK(rep.verdict == "pass");
    }
}
