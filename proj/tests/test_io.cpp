#include <doctest.h>

#include <filesystem>

#include "twc/corpus.hpp"
#include "twc/errors.hpp"
#include "twc/io.hpp"
#include "twc/scenarios.hpp"
#include "twc/twisted.hpp"

using namespace twc;

#ifndef TWC_DATA_DIR
#define TWC_DATA_DIR "data"
#endif

TEST_CASE("group json round trip") {
    auto q8 = corpus_group("Q8");
    GroupPtr back = io::parse_group(io::group_to_json(*q8));
    CHECK(back->name == "Q8");
    CHECK(back->n == 8);
    CHECK(back->table == q8->table);
}

TEST_CASE("group from generators") {
    GroupPtr s3 = io::parse_group(R"x({"name":"S3","generators":["(1 2)","(1 2 3)"]})x");
    CHECK(s3->n == 6);
    CHECK(isomorphic(*s3, *corpus_group("S3")));
    // point count inferred from the largest point
    GroupPtr c5 = io::parse_group(R"x({"generators":["(1 2 3 4 5)"]})x");
    CHECK(c5->n == 5);
}

TEST_CASE("group parse failures") {
    CHECK_THROWS_AS(io::parse_group("{"), ParseError);
    CHECK_THROWS_AS(io::parse_group(R"({"name":"x"})"), ParseError);
    CHECK_THROWS_AS(io::parse_group(R"({"order":2,"table":[[0,1]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_group(R"({"order":2,"table":[[0,1],[1,1]]})"), NotAGroupError);
    CHECK_THROWS_AS(io::parse_group(R"({"generators":["(1 2"]})"), ParseError);
}

TEST_CASE("automorphism json round trip") {
    GroupPtr c4 = cyclic_group(4);
    Automorphism neg = make_automorphism(c4, {0, 3, 2, 1});
    Automorphism back = io::parse_automorphism(io::automorphism_to_json(neg), c4);
    CHECK(back.image == neg.image);
    CHECK(back.order == 2);
    CHECK_THROWS_AS(io::parse_automorphism(R"({"image":[0,1]})", c4), ParseError);
    CHECK_THROWS_AS(io::parse_automorphism(R"({"image":[0,2,0,2]})", c4), Error);
}

TEST_CASE("matrix json round trip") {
    IntMatrix m = IntMatrix::from_rows({{0, -1}, {1, -1}});
    IntMatrix back = io::parse_matrix(io::matrix_to_json(m));
    CHECK(back == m);
    CHECK(io::parse_matrix("[[-1]]").k == 1);
    CHECK_THROWS_AS(io::parse_matrix("[[1,2],[3]]"), ParseError);
    CHECK_THROWS_AS(io::parse_matrix(R"({"k":2,"entries":[[1,0]]})"), ParseError);
}

TEST_CASE("sigma and point parsing") {
    GroupPtr c3 = cyclic_group(3);
    SigmaElement s = io::parse_sigma(R"([{"point":[2,-1],"g":2},{"point":[0,0],"g":1}])", c3, 2);
    CHECK(s.entries.size() == 2);
    CHECK(s.entries[0].first == Point{0, 0}); // canonical order sorts points
    SigmaElement back = io::parse_sigma(io::sigma_to_json(s), c3, 2);
    CHECK(back == s);
    CHECK_THROWS_AS(io::parse_sigma(R"([{"point":[1],"g":0}])", c3, 2), ParseError);
    CHECK_THROWS_AS(io::parse_sigma(R"([{"point":[1,1],"g":9}])", c3, 2), ParseError);

    CHECK(io::parse_point("1,0,-2", 3) == Point{1, 0, -2});
    CHECK(io::parse_point("[1,0,-2]", 3) == Point{1, 0, -2});
    CHECK_THROWS_AS(io::parse_point("1,2", 3), ParseError);
}

TEST_CASE("scenario round trip through serialization") {
    for (const auto& bs : bundled_scenarios()) {
        std::string text = io::scenario_to_json(bs.phi);
        WreathAutomorphism back = io::parse_scenario(text, "");
        CHECK(back.group->name == bs.phi.group->name);
        CHECK(back.k == bs.phi.k);
        CHECK(back.d == bs.phi.d);
        CHECK(back.window == bs.phi.window);
        CHECK(back.budget == bs.phi.budget);
        REQUIRE(back.a0.size() == bs.phi.a0.size());
        for (size_t i = 0; i < back.a0.size(); ++i) CHECK(back.a0[i] == bs.phi.a0[i]);
        REQUIRE(back.b_gens.size() == bs.phi.b_gens.size());
        for (size_t i = 0; i < back.b_gens.size(); ++i) CHECK(back.b_gens[i] == bs.phi.b_gens[i]);
    }
}

TEST_CASE("shipped scenario files match the bundled definitions") {
    for (const auto& bs : bundled_scenarios()) {
        std::string path = std::string(TWC_DATA_DIR) + "/scenarios/" + bs.name + ".json";
        WreathAutomorphism disk = io::load_scenario(path);
        CHECK(disk.group->n == bs.phi.group->n);
        CHECK(disk.k == bs.phi.k);
        CHECK(disk.d == bs.phi.d);
        CHECK(disk.window == bs.phi.window);
        for (size_t i = 0; i < disk.a0.size(); ++i) CHECK(disk.a0[i] == bs.phi.a0[i]);
    }
}

TEST_CASE("scenario overrides and failures") {
    const auto& bs = bundled_scenario("lamp2_reflect");
    std::string text = io::scenario_to_json(bs.phi);
    WreathAutomorphism w = io::parse_scenario(text, "", 99, 1234);
    CHECK(w.window == 99);
    CHECK(w.budget == 1234);
    CHECK_THROWS_AS(io::parse_scenario(R"({"k":1})", ""), ParseError);
    CHECK_THROWS_AS(
        io::parse_scenario(
            R"({"group":{"name":"C2","order":2,"table":[[0,1],[1,0]]},"k":2,"d":[[-1]],"a0":{}})",
            ""),
        ParseError); // d shape disagrees with k
}

TEST_CASE("group path resolution against the scenario directory") {
    std::string dir = "/tmp/twc_io_test";
    std::filesystem::create_directories(dir);
    io::write_file(dir + "/grp.json", io::group_to_json(*cyclic_group(3)));
    io::write_file(dir + "/sc.json",
                   R"({"group":"grp.json","k":1,"d":[[-1]],"a0":{"1":[{"point":[0],"g":1}],"2":[{"point":[0],"g":2}]}})");
    WreathAutomorphism w = io::load_scenario(dir + "/sc.json");
    CHECK(w.group->n == 3);
    CHECK(w.k == 1);
    std::string read_back = io::read_file(dir + "/grp.json");
    CHECK(read_back == io::group_to_json(*cyclic_group(3)));
    CHECK_THROWS_AS(io::read_file(dir + "/absent.json"), ParseError);
}
