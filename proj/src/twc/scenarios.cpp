#include "scenarios.hpp"

#include "corpus.hpp"
#include "errors.hpp"

namespace twc {

std::vector<SigmaElement> pointwise_a0(const GroupPtr& g, int k, const std::vector<int>& map) {
    Point zero((size_t)k, 0);
    std::vector<SigmaElement> a0((size_t)g->n);
    for (int i = 0; i < g->n; ++i) a0[(size_t)i] = sigma_delta(*g, zero, map[(size_t)i]);
    return a0;
}

std::vector<SigmaElement> standard_a0(const GroupPtr& g, int k) {
    std::vector<int> id((size_t)g->n);
    for (int i = 0; i < g->n; ++i) id[(size_t)i] = i;
    return pointwise_a0(g, k, id);
}

namespace {

std::vector<int> cyclic_multiplier(int n, int c) {
    std::vector<int> m((size_t)n);
    for (int i = 0; i < n; ++i) m[(size_t)i] = (int)(((long long)c * i % n + n) % n);
    return m;
}

std::vector<BundledScenario> build() {
    std::vector<BundledScenario> out;
    IntMatrix neg1 = IntMatrix::from_rows({{-1}});
    IntMatrix pos1 = IntMatrix::from_rows({{1}});
    IntMatrix rot3 = IntMatrix::from_rows({{0, -1}, {1, -1}});

    {
        GroupPtr c2 = corpus_group("C2");
        out.push_back({"lamp2_reflect",
                       "lamplighter over Z with coordinate reflection, wide window for witness runs",
                       make_wreath_automorphism(c2, 1, neg1, {}, standard_a0(c2, 1), 4096)});
    }
    {
        GroupPtr c2 = corpus_group("C2");
        out.push_back({"lamp2_identity",
                       "lamplighter over Z with identity lattice part, infinitely many base classes",
                       make_wreath_automorphism(c2, 1, pos1, {}, standard_a0(c2, 1), 32)});
    }
    {
        GroupPtr c5 = corpus_group("C5");
        out.push_back({"lamp5_times2",
                       "Z/5 lamps, reflection with doubling on lamps, fixed-point-free on closures",
                       make_wreath_automorphism(c5, 1, neg1, {},
                                                pointwise_a0(c5, 1, cyclic_multiplier(5, 2)), 32)});
    }
    {
        GroupPtr c7 = corpus_group("C7");
        out.push_back({"lamp7_times3",
                       "Z/7 lamps, reflection with tripling on lamps, fixed-point-free on closures",
                       make_wreath_automorphism(c7, 1, neg1, {},
                                                pointwise_a0(c7, 1, cyclic_multiplier(7, 3)), 32)});
    }
    {
        GroupPtr g = corpus_group("C3xC3");
        std::vector<int> inv((size_t)g->n);
        for (int i = 0; i < g->n; ++i) inv[(size_t)i] = g->inv(i);
        out.push_back({"lamp_z3sq_inv",
                       "Z/3 x Z/3 lamps inverted under reflection, wide window for witness runs",
                       make_wreath_automorphism(g, 1, neg1, {}, pointwise_a0(g, 1, inv), 4096)});
    }
    {
        GroupPtr v4 = corpus_group("C2xC2");
        std::vector<int> cyc{0, 2, 3, 1};
        out.push_back({"wreath_z2sq_rot",
                       "rank-2 lattice of order 3 rotating the three involutions of C2xC2",
                       make_wreath_automorphism(v4, 2, rot3, {}, pointwise_a0(v4, 2, cyc), 16)});
    }
    {
        GroupPtr c3 = corpus_group("C3");
        out.push_back({"wreath_z3_rot",
                       "rank-2 lattice of order 3 over Z/3 lamps, three base classes",
                       make_wreath_automorphism(c3, 2, rot3, {}, standard_a0(c3, 2), 16)});
    }
    {
        GroupPtr s3 = corpus_group("S3");
        int t = -1;
        for (int i = 0; i < s3->n && t < 0; ++i)
            if (s3->element_order(i) == 2) t = i;
        Point zero{0};
        std::vector<SigmaElement> b{sigma_delta(*s3, zero, t)};
        out.push_back({"wreath_s3_cocycle",
                       "S3 lamps under reflection with a nontrivial cocycle at the generator",
                       make_wreath_automorphism(s3, 1, neg1, b, standard_a0(s3, 1), 64)});
    }
    {
        GroupPtr a5 = corpus_group("A5");
        out.push_back({"wreath_a5",
                       "A5 lamps under reflection, nonsolvable closure contrast case",
                       make_wreath_automorphism(a5, 1, neg1, {}, standard_a0(a5, 1), 8)});
    }
    return out;
}

} // namespace

const std::vector<BundledScenario>& bundled_scenarios() {
    static const std::vector<BundledScenario> s = build();
    return s;
}

const BundledScenario& bundled_scenario(const std::string& name) {
    for (const auto& s : bundled_scenarios())
        if (s.name == name) return s;
    throw ParseError("no bundled scenario named \"" + name + "\"");
}

} // namespace twc
