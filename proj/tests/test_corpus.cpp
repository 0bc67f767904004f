#include <doctest.h>

#include <map>
#include <set>

#include "twc/corpus.hpp"
#include "twc/errors.hpp"

using namespace twc;

TEST_CASE("corpus has the classified number of groups per order") {
    std::map<int, int> counts;
    std::set<std::string> names;
    for (const auto& ng : corpus()) {
        ++counts[ng.group->n];
        CHECK(names.insert(ng.name).second);
        CHECK(ng.name == ng.group->name);
    }
    const std::map<int, int> expected{
        {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},  {9, 2},
        {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
        {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}, {60, 1}};
    CHECK(counts == expected);
    CHECK(corpus().size() == 75);
}

TEST_CASE("corpus lookup") {
    CHECK(corpus_group("S3")->n == 6);
    CHECK(corpus_group("Q8")->n == 8);
    CHECK(corpus_group("A5")->n == 60);
    CHECK_THROWS_AS(corpus_group("nope"), ParseError);
}

TEST_CASE("permutation parsing") {
    auto p = parse_permutation("(1 2 3)(4 5)", 5);
    CHECK(p == std::vector<int>{1, 2, 0, 4, 3});
    CHECK(parse_permutation("", 3) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), ParseError); // reused point
    CHECK_THROWS_AS(parse_permutation("(1 4)", 3), ParseError);      // out of range
    CHECK_THROWS_AS(parse_permutation("(1 2", 3), ParseError);       // unclosed
}

TEST_CASE("permutation groups close correctly") {
    GroupPtr s3 = permutation_group({"(1 2)", "(1 2 3)"}, 3, "S3");
    CHECK(s3->n == 6);
    GroupPtr a4 = permutation_group({"(1 2 3)", "(2 3 4)"}, 4, "A4");
    CHECK(a4->n == 12);
}

TEST_CASE("isomorphism testing separates lookalikes") {
    CHECK(isomorphic(*dihedral_group(3), *permutation_group({"(1 2)", "(1 2 3)"}, 3, "S3")));
    CHECK(isomorphic(*corpus_group("C6"), *direct_product(cyclic_group(3), cyclic_group(2))));
    CHECK_FALSE(isomorphic(*cyclic_group(4), *direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK_FALSE(isomorphic(*corpus_group("M16"), *corpus_group("C8xC2")));
    CHECK_FALSE(isomorphic(*corpus_group("Pauli16"), *corpus_group("(C2xC2):C4")));
    CHECK_FALSE(isomorphic(*corpus_group("Q8xC2"), *corpus_group("C4:C4")));
    CHECK_FALSE(isomorphic(*corpus_group("D12"), *corpus_group("C3:D4")));
    CHECK_FALSE(isomorphic(*corpus_group("D4"), *corpus_group("Q8")));
}

TEST_CASE("semidirect construction validates the twist") {
    CHECK_THROWS_AS(semidirect_cyclic(8, 2, 2, "bad"), Error);  // 2^2 != 1 mod 8
    CHECK(semidirect_cyclic(3, 2, 2, "S3~")->n == 6);
}
