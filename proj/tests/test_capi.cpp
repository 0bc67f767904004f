#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "twisted/twisted.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    twc_string_free(s);
    return out;
}

#ifndef TWC_DATA_DIR
#define TWC_DATA_DIR "data"
#endif

const std::string kData = TWC_DATA_DIR;

} // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::strlen(twc_version()) > 0);
    twc_group* g = nullptr;
    CHECK(twc_group_from_json("{not json", &g) == TWC_ERROR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::strlen(twc_last_error()) > 0);
    CHECK(twc_group_from_json(nullptr, &g) == TWC_ERROR_PARSE);
}

TEST_CASE("group lifecycle and reports") {
    twc_group* g = nullptr;
    REQUIRE(twc_group_bundled("S3", &g) == TWC_OK);
    CHECK(twc_group_order(g) == 6);
    CHECK(std::string(twc_group_name(g)) == "S3");

    char* listing = nullptr;
    REQUIRE(twc_group_list_bundled(&listing) == TWC_OK);
    json names = json::parse(take(listing));
    CHECK(names.size() == 75);

    char* gj = nullptr;
    REQUIRE(twc_group_to_json(g, &gj) == TWC_OK);
    std::string text = take(gj);
    twc_group* copy = nullptr;
    REQUIRE(twc_group_from_json(text.c_str(), &copy) == TWC_OK);
    CHECK(twc_group_order(copy) == 6);

    // identity automorphism via an explicit image
    json img{{"image", json::array()}};
    for (int i = 0; i < 6; ++i) img["image"].push_back(i);
    twc_aut* a = nullptr;
    REQUIRE(twc_aut_from_json(g, img.dump().c_str(), &a) == TWC_OK);

    char* rep = nullptr;
    REQUIRE(twc_classes_report(g, a, &rep) == TWC_OK);
    json classes = json::parse(take(rep));
    CHECK(classes["count"] == 3); // ordinary conjugacy classes of S3

    REQUIRE(twc_fixed_report(g, a, &rep) == TWC_OK);
    json fixed = json::parse(take(rep));
    CHECK(fixed["order"] == 6);
    CHECK(fixed["trivial"] == false);

    REQUIRE(twc_tbft_report(g, a, &rep) == TWC_OK);
    json tb = json::parse(take(rep));
    CHECK(tb["equal"] == true);
    CHECK(tb["reidemeister_number"] == 3);

    REQUIRE(twc_char_table_report(g, &rep) == TWC_OK);
    json ct = json::parse(take(rep));
    CHECK(ct["degrees"] == json::array({1, 1, 2}));

    REQUIRE(twc_solvability_group_report(g, &rep) == TWC_OK);
    json sol = json::parse(take(rep));
    CHECK(sol["base_solvable"] == true);

    twc_aut_free(a);
    twc_group_free(copy);
    twc_group_free(g);
}

TEST_CASE("file loading") {
    twc_group* g = nullptr;
    REQUIRE(twc_group_from_file((kData + "/groups/c4.json").c_str(), &g) == TWC_OK);
    CHECK(twc_group_order(g) == 4);
    twc_aut* a = nullptr;
    REQUIRE(twc_aut_from_file(g, (kData + "/groups/c4_negate.aut.json").c_str(), &a) == TWC_OK);
    char* rep = nullptr;
    REQUIRE(twc_classes_report(g, a, &rep) == TWC_OK);
    CHECK(json::parse(take(rep))["count"] == 2);
    twc_aut_free(a);
    twc_group_free(g);
    CHECK(twc_group_from_file("/nonexistent/file.json", &g) == TWC_ERROR_PARSE);
}

TEST_CASE("lattice report") {
    char* rep = nullptr;
    REQUIRE(twc_zk_report("[[0,-1],[1,-1]]", &rep) == TWC_OK);
    json j = json::parse(take(rep));
    CHECK(j["finite"] == true);
    CHECK(j["count"] == "3");
    CHECK(j["invariant_factors"] == json::array({"3"}));
    REQUIRE(twc_zk_report("[[1,0],[0,1]]", &rep) == TWC_OK);
    json inf = json::parse(take(rep));
    CHECK(inf["finite"] == false);
    CHECK(inf["count"] == "infinite");
    CHECK(twc_zk_report("[[2,0],[0,1]]", &rep) == TWC_ERROR_DOMAIN); // not unimodular
}

TEST_CASE("scenario lifecycle") {
    char* listing = nullptr;
    REQUIRE(twc_scenario_list_bundled(&listing) == TWC_OK);
    json names = json::parse(take(listing));
    CHECK(names.size() == 9);

    twc_scenario* s = nullptr;
    REQUIRE(twc_scenario_bundled("lamp2_reflect", &s) == TWC_OK);
    char* rep = nullptr;
    REQUIRE(twc_wreath_check_report(s, &rep) == TWC_OK);
    json wc = json::parse(take(rep));
    CHECK(wc["certificate"]["unimodular"] == true);
    CHECK(wc["d_order"] == 2);
    CHECK(wc["order_condition"] == "holds on window");

    REQUIRE(twc_witness_report(s, R"([{"point":[1],"g":1},{"point":[-1],"g":1}])", "1", 4, &rep) ==
            TWC_OK);
    json wit = json::parse(take(rep));
    CHECK(wit["witnesses"].size() == 4);
    CHECK(wit["orbit_length"] == 2);

    REQUIRE(twc_solvability_scenario_report(s, &rep) == TWC_OK);
    json sol = json::parse(take(rep));
    CHECK(sol["scenario_based"] == true);
    twc_scenario_free(s);

    REQUIRE(twc_scenario_from_file((kData + "/scenarios/lamp5_times2.json").c_str(), -1, -1, &s) ==
            TWC_OK);
    REQUIRE(twc_separate_report(s, 3, &rep) == TWC_OK);
    json sep = json::parse(take(rep));
    CHECK(sep["rbar_count"] == "2");
    CHECK(sep["predicate_available"] == true);
    REQUIRE(twc_separate_classify(s, R"({"sigma":[],"z":[1]})", &rep) == TWC_OK);
    json cls = json::parse(take(rep));
    CHECK(cls["class"].size() == 1);
    twc_scenario_free(s);

    CHECK(twc_scenario_bundled("nope", &s) == TWC_ERROR_PARSE);
}

TEST_CASE("verification entry point") {
    int failures = -1;
    char* rep = nullptr;
    REQUIRE(twc_verify("lemma5-orbit-stabilizer", "Q8", 0, &failures, &rep) == TWC_OK);
    json j = json::parse(take(rep));
    CHECK(failures == 0);
    CHECK(j["failures"] == 0);
    CHECK(j["reports"].size() > 0);
    for (const auto& r : j["reports"]) CHECK(r["verdict"] != "fail");

    char* ids = nullptr;
    REQUIRE(twc_verify_check_ids(&ids) == TWC_OK);
    CHECK(json::parse(take(ids)).size() == 12);

    CHECK(twc_verify("bogus-check", nullptr, 0, &failures, &rep) == TWC_ERROR_PARSE);
}
