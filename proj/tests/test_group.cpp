#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "twc/corpus.hpp"
#include "twc/errors.hpp"
#include "twc/group.hpp"

using namespace twc;

TEST_CASE("table validation rejects broken tables") {
    CHECK_THROWS_AS(build_group({{0, 1}, {1, 1}}, {}), NotAGroupError); // not a Latin square
    // Latin square with identity and inverses but (1*1)*2 != 1*(1*2)
    CHECK_THROWS_AS(build_group({{0, 1, 2, 3, 4, 5},
                                 {1, 5, 3, 4, 2, 0},
                                 {2, 3, 4, 5, 0, 1},
                                 {3, 4, 5, 0, 1, 2},
                                 {4, 2, 0, 1, 5, 3},
                                 {5, 0, 1, 2, 3, 4}},
                                {}),
                    NotAGroupError);
    // Latin square with no identity row
    CHECK_THROWS_AS(build_group({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}, {}), NotAGroupError);
}

TEST_CASE("identity is located even when element 0 is not the identity") {
    // C3 with relabeled elements: 1 is the identity
    GroupPtr g = build_group({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}, {.name = "relabeled"});
    CHECK(g->identity == 1);
    CHECK(g->mul(0, 0) == 2);
    CHECK(g->inv(0) == 2);
    CHECK(g->element_order(0) == 3);
}

TEST_CASE("cyclic group basics") {
    GroupPtr c6 = cyclic_group(6);
    CHECK(c6->n == 6);
    CHECK(c6->identity == 0);
    CHECK(c6->is_abelian());
    CHECK(c6->element_order(1) == 6);
    CHECK(c6->exponent() == 6);
    CHECK(c6->pow(1, 4) == 4);
    CHECK(c6->pow(1, -1) == 5);
    auto hist = c6->order_histogram();
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 1);
    CHECK(hist[3] == 2);
    CHECK(hist[6] == 2);
    CHECK(c6->center().size() == 6);
}

TEST_CASE("dihedral group of order 8") {
    GroupPtr d4 = dihedral_group(4);
    CHECK(d4->n == 8);
    CHECK_FALSE(d4->is_abelian());
    CHECK(d4->center().size() == 2);
    auto hist = d4->order_histogram();
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 5);
    CHECK(hist[4] == 2);
}

TEST_CASE("quaternion group via dicyclic construction") {
    GroupPtr q8 = dicyclic_group(2);
    CHECK(q8->n == 8);
    auto hist = q8->order_histogram();
    CHECK(hist[1] == 1);
    CHECK(hist[2] == 1); // unique involution
    CHECK(hist[4] == 6);
    CHECK(q8->center().size() == 2);
}

TEST_CASE("generated subgroups and normality in D4") {
    GroupPtr d4 = dihedral_group(4);
    Subgroup rot = generated_subgroup(d4, {1}); // the rotation
    CHECK(rot.size() == 4);
    CHECK(is_normal(rot));
    Subgroup refl = generated_subgroup(d4, {4}); // one reflection
    CHECK(refl.size() == 2);
    CHECK_FALSE(is_normal(refl));
    Quotient q = quotient_group(d4, rot);
    CHECK(q.group->n == 2);
    CHECK(q.projection[d4->identity] == q.group->identity);
}

TEST_CASE("derived series") {
    auto s3 = corpus_group("S3");
    DerivedSeries ds = derived_series(s3);
    CHECK(ds.solvable);
    CHECK(ds.derived_length == 2);

    DerivedSeries c6 = derived_series(cyclic_group(6));
    CHECK(c6.solvable);
    CHECK(c6.derived_length == 1);

    DerivedSeries a5 = derived_series(corpus_group("A5"));
    CHECK_FALSE(a5.solvable);
    CHECK_FALSE(a5.derived_length.has_value());
}

TEST_CASE("generator image extension") {
    GroupPtr c4 = cyclic_group(4);
    auto full = extend_generator_images(*c4, *c4, {1}, {3}, true);
    REQUIRE(full.has_value());
    CHECK(*full == std::vector<int>{0, 3, 2, 1});
    // x -> 2x is not injective on C4
    CHECK_FALSE(extend_generator_images(*c4, *c4, {1}, {2}, true).has_value());
    // order mismatch: nothing of order 4 maps onto an involution consistently
    GroupPtr c2 = cyclic_group(2);
    auto onto = extend_generator_images(*c4, *c2, {1}, {1}, false);
    REQUIRE(onto.has_value()); // fine as a homomorphism
    CHECK_FALSE(extend_generator_images(*c4, *c2, {1}, {1}, true).has_value());
}

TEST_CASE("small generating sets generate") {
    for (const char* name : {"S3", "D4", "Q8", "A4", "C12", "SL23"}) {
        GroupPtr g = corpus_group(name);
        auto gens = small_generating_set(*g);
        CHECK(generated_subgroup(g, gens).size() == g->n);
    }
}

TEST_CASE("automorphism construction and composition") {
    GroupPtr c4 = cyclic_group(4);
    Automorphism neg = make_automorphism(c4, {0, 3, 2, 1});
    CHECK(neg.order == 2);
    CHECK_THROWS_AS(make_automorphism(c4, {0, 2, 0, 2}), Error);

    auto s3 = corpus_group("S3");
    int t = -1;
    for (int x = 0; x < s3->n; ++x)
        if (s3->element_order(x) == 2) { t = x; break; }
    REQUIRE(t >= 0);
    Automorphism inner = inner_automorphism(s3, t);
    CHECK(inner.order == 2);
    for (int g = 0; g < s3->n; ++g) {
        for (int h = 0; h < s3->n; ++h) {
            Automorphism lhs = compose(inner_automorphism(s3, g), inner_automorphism(s3, h));
            Automorphism rhs = inner_automorphism(s3, s3->mul(g, h));
            CHECK(lhs.image == rhs.image);
        }
    }
}

TEST_CASE("subgroup index maps agree") {
    GroupPtr d4 = dihedral_group(4);
    Subgroup rot = generated_subgroup(d4, {1});
    for (int i = 0; i < rot.size(); ++i) {
        int parent = rot.members[i];
        CHECK(rot.parent_to_sub[parent] == i);
        for (int j = 0; j < rot.size(); ++j) {
            int prod = d4->mul(rot.members[i], rot.members[j]);
            CHECK(rot.as_group->mul(i, j) == rot.parent_to_sub[prod]);
        }
    }
}
