#include "autenum.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace twc {

namespace {

/// Closes the partial map gens[i] -> images[i] over the subgroup the prefix
/// generates. Returns false on any inconsistency (order clash, injectivity
/// failure, multiplication clash).
bool prefix_consistent(const FiniteGroup& g, const std::vector<int>& gens,
                       const std::vector<int>& images, size_t prefix) {
    std::vector<int> f((size_t)g.n, -1);
    std::vector<int> back((size_t)g.n, -1);
    auto assign = [&](int x, int y) {
        if (f[(size_t)x] >= 0) return f[(size_t)x] == y;
        if (back[(size_t)y] >= 0) return false;
        f[(size_t)x] = y;
        back[(size_t)y] = x;
        return true;
    };
    if (!assign(g.identity, g.identity)) return false;
    std::vector<int> defined{g.identity};
    for (size_t i = 0; i < prefix; ++i) {
        if (f[(size_t)gens[i]] < 0) defined.push_back(gens[i]);
        if (!assign(gens[i], images[i])) return false;
    }
    for (size_t head = 0; head < defined.size(); ++head) {
        int x = defined[head];
        for (size_t i = 0; i < prefix; ++i) {
            int y = g.mul(x, gens[i]);
            int fy = g.mul(f[(size_t)x], images[i]);
            if (f[(size_t)y] < 0) defined.push_back(y);
            if (!assign(y, fy)) return false;
        }
    }
    // products of two defined elements must already agree where defined
    for (int x : defined)
        for (int y : defined) {
            int xy = g.mul(x, y);
            if (f[(size_t)xy] >= 0 && f[(size_t)xy] != g.mul(f[(size_t)x], f[(size_t)y])) return false;
        }
    return true;
}

struct Search {
    const FiniteGroup& g;
    GroupPtr gp;
    std::vector<int> gens;
    std::vector<std::vector<int>> candidates; // per level, order-matched elements
    std::vector<int> images;
    AutEnumeration result;
    long long budget;
    bool aborted = false;

    void run(size_t level) {
        if (aborted) return;
        if (level == gens.size()) {
            auto full = extend_generator_images(g, g, gens, images, true);
            if (full) {
                if ((long long)result.autos.size() >= budget) {
                    aborted = true;
                    return;
                }
                result.autos.push_back(make_automorphism(gp, *full));
            }
            return;
        }
        for (int cand : candidates[level]) {
            ++result.nodes;
            images[level] = cand;
            if (!prefix_consistent(g, gens, images, level + 1)) continue;
            run(level + 1);
            if (aborted) return;
        }
    }
};

} // namespace

AutEnumeration enumerate_automorphisms(const GroupPtr& g, long long budget, std::uint64_t seed) {
    AutEnumeration out;
    if (budget < 1) budget = 1;
    if (g->n == 1) {
        out.autos.push_back(identity_automorphism(g));
        return out;
    }
    Search s{*g, g, small_generating_set(*g), {}, {}, {}, budget, false};
    s.candidates.resize(s.gens.size());
    for (size_t i = 0; i < s.gens.size(); ++i) {
        int want = g->element_order(s.gens[i]);
        for (int c = 0; c < g->n; ++c)
            if (g->element_order(c) == want) s.candidates[i].push_back(c);
    }
    s.images.assign(s.gens.size(), -1);
    s.run(0);
    out = std::move(s.result);
    if (!s.aborted) return out;

    // Too many automorphisms: replace the partial run with a seeded uniform
    // sample of distinct generator-image tuples.
    out.complete = false;
    std::mt19937_64 rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<Automorphism> sample;
    long long attempts = 0, max_attempts = budget * 64;
    while ((long long)sample.size() < budget && attempts < max_attempts) {
        ++attempts;
        std::vector<int> images(s.gens.size());
        for (size_t i = 0; i < s.gens.size(); ++i) {
            const auto& cs = s.candidates[i];
            images[i] = cs[(size_t)(rng() % cs.size())];
        }
        auto full = extend_generator_images(*g, *g, s.gens, images, true);
        if (!full) continue;
        if (!seen.insert(images).second) continue;
        sample.push_back(make_automorphism(g, *full));
    }
    out.autos = std::move(sample);
    return out;
}

} // namespace twc
