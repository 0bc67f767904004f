#include <doctest.h>

#include <random>

#include "twc/errors.hpp"
#include "twc/intmat.hpp"

using namespace twc;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int k, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m;
    m.k = k;
    m.a.assign((size_t)k * k, 0);
    for (auto& v : m.a) v = dist(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    BigInt d = m.determinant();
    return d == 1 || d == -1;
}

} // namespace

TEST_CASE("matrix arithmetic") {
    IntMatrix a = IntMatrix::from_rows({{1, 1}, {-1, 2}});
    CHECK(a.determinant() == 3);
    CHECK((a * IntMatrix::identity(2)) == a);
    CHECK(a.transpose().determinant() == 3);
    CHECK(a.apply({1, 0}) == std::vector<BigInt>{1, -1});
}

TEST_CASE("smith normal form of a frozen matrix") {
    IntMatrix a = IntMatrix::from_rows({{1, 1}, {-1, 2}});
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<BigInt>{1, 3});
    CHECK((s.u * a * s.v) == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int k = 1 + (int)(rng() % 4);
        IntMatrix a = random_matrix(rng, k, 4);
        SmithDecomposition s = smith_normal_form(a);
        CHECK((s.u * a * s.v) == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        auto diag = s.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            if (diag[i] == 0) CHECK(diag[i + 1] == 0);
        }
        BigInt prod = 1;
        for (const auto& d : diag) prod *= d;
        BigInt det = a.determinant();
        CHECK(prod == (det < 0 ? -det : det));
    }
}

TEST_CASE("unimodular inverse") {
    IntMatrix m = IntMatrix::from_rows({{2, 1}, {1, 1}});
    IntMatrix inv = unimodular_inverse(m);
    CHECK((m * inv) == IntMatrix::identity(2));
    CHECK((inv * m) == IntMatrix::identity(2));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), NotUnimodularError);
}

TEST_CASE("matrix order detection") {
    CHECK(matrix_order(IntMatrix::from_rows({{0, -1}, {1, -1}})) == 3);
    CHECK(matrix_order(IntMatrix::from_rows({{0, -1}, {1, 0}})) == 4);
    CHECK(matrix_order(IntMatrix::from_rows({{0, -1}, {1, 1}})) == 6);
    CHECK(matrix_order(IntMatrix::from_rows({{-1}})) == 2);
    CHECK_FALSE(matrix_order(IntMatrix::from_rows({{1, 1}, {0, 1}})).has_value());
    CHECK_THROWS_AS(matrix_order(IntMatrix::from_rows({{2}})), NotUnimodularError);
}

TEST_CASE("lattice class counts") {
    ZkClassData neg = reidemeister_zk(IntMatrix::from_rows({{-1}}));
    CHECK(neg.finite);
    CHECK(neg.count == 2);
    CHECK(neg.fixed_sublattice_trivial);

    ZkClassData rot = reidemeister_zk(IntMatrix::from_rows({{0, -1}, {1, -1}}));
    CHECK(rot.finite);
    CHECK(rot.count == 3);
    CHECK(rot.fixed_sublattice_trivial);

    ZkClassData id1 = reidemeister_zk(IntMatrix::from_rows({{1}}));
    CHECK_FALSE(id1.finite);
    CHECK_FALSE(id1.fixed_sublattice_trivial);

    ZkClassData swap2 = reidemeister_zk(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK_FALSE(swap2.finite);
    CHECK_FALSE(swap2.fixed_sublattice_trivial);
}

TEST_CASE("quotient projection and lift round trip") {
    IntMatrix d = IntMatrix::from_rows({{0, -1}, {1, -1}});
    ZkClassData zk = reidemeister_zk(d);
    REQUIRE(zk.quotient.has_value());
    const FiniteAbelianQuotient& q = *zk.quotient;
    CHECK(q.order == 3);
    // enumerate all residue tuples and check lift is a section
    std::vector<std::vector<BigInt>> residues;
    residues.push_back({});
    for (const auto& f : q.factors) {
        std::vector<std::vector<BigInt>> next;
        for (const auto& r : residues)
            for (BigInt v = 0; v < f; ++v) {
                auto copy = r;
                copy.push_back(v);
                next.push_back(copy);
            }
        residues = next;
    }
    for (const auto& r : residues) CHECK(q.project(q.lift(r)) == r);
    // projection is additive
    auto a = q.project_ll({1, 2});
    auto b = q.project_ll({2, 3});
    std::vector<BigInt> sum;
    for (size_t i = 0; i < a.size(); ++i) sum.push_back((a[i] + b[i]) % q.factors[i]);
    CHECK(q.project_ll({3, 5}) == sum);
}

TEST_CASE("integer linear solve") {
    IntMatrix m = IntMatrix::from_rows({{2, 1}, {1, 1}});
    auto w = solve_integer(m, {3, 2});
    REQUIRE(w.has_value());
    CHECK(m.apply(*w) == std::vector<BigInt>{3, 2});
    CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2}}), {1}).has_value());
    auto z = solve_integer(IntMatrix::from_rows({{2}}), {4});
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 2);
}

TEST_CASE("character count of the finite coordinate quotient") {
    for (auto rows : {std::vector<std::vector<long long>>{{-1}},
                      std::vector<std::vector<long long>>{{0, -1}, {1, -1}},
                      std::vector<std::vector<long long>>{{0, -1}, {1, 0}}}) {
        IntMatrix d = IntMatrix::from_rows(rows);
        ZkClassData zk = reidemeister_zk(d);
        REQUIRE(zk.finite);
        CHECK(dual_fixed_count_abelian(*zk.quotient, d) == zk.count);
    }
}
