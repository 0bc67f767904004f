#include <doctest.h>

#include <algorithm>
#include <map>

#include "twc/autenum.hpp"
#include "twc/chartable.hpp"
#include "twc/corpus.hpp"
#include "twc/twisted.hpp"

using namespace twc;

TEST_CASE("conjugacy data for S3") {
    auto s3 = corpus_group("S3");
    ConjugacyClassData d = conjugacy_data(s3);
    CHECK(d.count == 3);
    std::vector<int> sizes = d.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});
    CHECK(d.class_of[s3->identity] == 0);
    CHECK(d.sizes[0] == 1);
    for (int j = 0; j < d.count; ++j) CHECK(d.inverse_class[d.inverse_class[j]] == j);
}

TEST_CASE("character table of C2") {
    CharacterTable t = character_table(cyclic_group(2));
    REQUIRE(t.degrees == std::vector<long long>{1, 1});
    CHECK(t.exponent == 2);
    CycInt one = CycInt::integer(2, 1);
    CycInt minus = CycInt::integer(2, -1);
    bool saw_trivial = false, saw_sign = false;
    for (const auto& row : t.values) {
        if (row[0] == one && row[1] == one) saw_trivial = true;
        if (row[0] == one && row[1] == minus) saw_sign = true;
    }
    CHECK(saw_trivial);
    CHECK(saw_sign);
}

TEST_CASE("degree patterns") {
    CHECK(character_table(corpus_group("S3")).degrees == std::vector<long long>{1, 1, 2});
    CHECK(character_table(corpus_group("D4")).degrees == std::vector<long long>{1, 1, 1, 1, 2});
    CHECK(character_table(corpus_group("Q8")).degrees == std::vector<long long>{1, 1, 1, 1, 2});
    CHECK(character_table(corpus_group("A4")).degrees == std::vector<long long>{1, 1, 1, 3});
    CHECK(character_table(corpus_group("C7:C3")).degrees ==
          std::vector<long long>{1, 1, 1, 3, 3});
    CHECK(character_table(corpus_group("A5")).degrees ==
          std::vector<long long>{1, 3, 3, 4, 5});
}

TEST_CASE("prime is compatible with the exponent") {
    for (const char* name : {"S3", "Q8", "C12", "A4"}) {
        CharacterTable t = character_table(corpus_group(name));
        CHECK(t.prime % t.exponent == 1);
        CHECK(t.prime * t.prime > 4 * t.group->n);
    }
}

TEST_CASE("row orthogonality holds exactly") {
    for (const char* name : {"S4", "D6", "SL23", "C5:C4"}) {
        CharacterTable t = character_table(corpus_group(name));
        long long e = t.exponent;
        int m = t.classes.count;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                CycInt acc = CycInt::zero(e);
                for (int c = 0; c < m; ++c) {
                    CycInt term = t.values[i][c] * t.values[j][c].conjugate();
                    for (int rep = 0; rep < t.classes.sizes[c]; ++rep) acc = acc + term;
                }
                CHECK(acc == CycInt::integer(e, i == j ? t.group->n : 0));
            }
        }
    }
}

TEST_CASE("degrees square sum to the group order") {
    for (const char* name : {"S3", "D4", "Q8", "A4", "SD16", "S4", "A5"}) {
        CharacterTable t = character_table(corpus_group(name));
        long long sum = 0;
        for (long long d : t.degrees) sum += d * d;
        CHECK(sum == t.group->n);
    }
}

TEST_CASE("dual action permutes classes and characters consistently") {
    for (const char* name : {"S3", "Q8", "C3xC3", "A4"}) {
        auto g = corpus_group(name);
        CharacterTable t = character_table(g);
        AutEnumeration autos = enumerate_automorphisms(g);
        for (const auto& phi : autos.autos) {
            DualAction d = dual_action(t, phi);
            std::vector<bool> seen(t.classes.count, false);
            for (int c : d.class_permutation) {
                CHECK_FALSE(seen[c]);
                seen[c] = true;
            }
            std::vector<bool> seenr((int)t.values.size(), false);
            for (int r : d.character_permutation) {
                CHECK_FALSE(seenr[r]);
                seenr[r] = true;
            }
            CHECK(d.fixed_classes == d.fixed_characters);
        }
    }
}

TEST_CASE("class count equals fixed character count across automorphisms") {
    for (const char* name : {"S3", "C8", "D5", "A4", "Q8"}) {
        auto g = corpus_group(name);
        CharacterTable t = character_table(g);
        AutEnumeration autos = enumerate_automorphisms(g);
        for (const auto& phi : autos.autos) {
            TbftReport rep = tbft_check(t, phi);
            CHECK(rep.equal);
            CHECK(rep.reidemeister_number == twisted_classes(phi).count);
            CHECK(rep.fixed_character_count == fixed_irreducibles(t, phi));
        }
    }
}
