#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twc/autenum.hpp"
#include "twc/chartable.hpp"
#include "twc/corpus.hpp"
#include "twc/scenarios.hpp"
#include "twc/suite.hpp"
#include "twc/twisted.hpp"
#include "twc/wreath.hpp"

using namespace twc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::map<std::string, AutEnumeration>& aut_cache() {
    static std::map<std::string, AutEnumeration> cache;
    return cache;
}

const AutEnumeration& autos_for(const NamedGroup& ng) {
    auto it = aut_cache().find(ng.name);
    if (it == aut_cache().end())
        it = aut_cache().emplace(ng.name, enumerate_automorphisms(ng.group)).first;
    return it->second;
}

struct Outcome {
    bool pass = false;
    std::string note;
};

// 1 + 2: twisted-orbit class count vs fixed irreducible characters, and the
// character/class fixed-count agreement, over every bundled group of order
// <= 24 and every automorphism.
Outcome sweep_results[2];
bool sweep_done = false;

void run_spectral_sweep() {
    if (sweep_done) return;
    sweep_done = true;
    auto t0 = Clock::now();
    long long autos_total = 0;
    int groups_total = 0;
    std::string first_fail_1, first_fail_2;
    for (const auto& ng : corpus()) {
        if (ng.group->n > 24) continue;
        ++groups_total;
        const AutEnumeration& en = autos_for(ng);
        if (!en.complete) {
            first_fail_1 = ng.name + ": automorphism enumeration incomplete";
            break;
        }
        CharacterTable table = character_table(ng.group);
        for (const auto& phi : en.autos) {
            ++autos_total;
            int r = twisted_classes(phi).count;
            DualAction dual = dual_action(table, phi);
            if (r != dual.fixed_characters && first_fail_1.empty())
                first_fail_1 = ng.name + ": class count " + std::to_string(r) +
                               " != fixed characters " + std::to_string(dual.fixed_characters);
            if (dual.fixed_characters != dual.fixed_classes && first_fail_2.empty())
                first_fail_2 = ng.name + ": fixed characters " +
                               std::to_string(dual.fixed_characters) + " != fixed classes " +
                               std::to_string(dual.fixed_classes);
        }
        if (!first_fail_1.empty() && !first_fail_2.empty()) break;
    }
    double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d groups, %lld automorphisms, %.1fs", groups_total,
                  autos_total, dt);
    bool in_time = dt < 300.0;
    sweep_results[0].pass = first_fail_1.empty() && in_time;
    sweep_results[0].note = first_fail_1.empty() ? std::string(buf) : first_fail_1;
    if (first_fail_1.empty() && !in_time) sweep_results[0].note += " (over the 300s limit)";
    sweep_results[1].pass = first_fail_2.empty();
    sweep_results[1].note = first_fail_2.empty() ? std::string(buf) : first_fail_2;
}

Outcome check_class_count_vs_characters() {
    run_spectral_sweep();
    return sweep_results[0];
}

Outcome check_fixed_characters_vs_fixed_classes() {
    run_spectral_sweep();
    return sweep_results[1];
}

// 3: shifting by an inner factor gives a verified class bijection, all
// (G, phi, x) with |G| <= 16.
Outcome check_shift_bijection() {
    long long checked = 0;
    for (const auto& ng : corpus()) {
        if (ng.group->n > 16) continue;
        const AutEnumeration& en = autos_for(ng);
        if (!en.complete) return {false, ng.name + ": enumeration incomplete"};
        for (const auto& phi : en.autos) {
            for (int x = 0; x < ng.group->n; ++x) {
                ShiftClassMap m = shift_class_map(phi, x);
                ++checked;
                if (m.phi_classes.count != m.psi_classes.count)
                    return {false, ng.name + ": count changed under shift"};
                std::vector<bool> seen(m.psi_classes.count, false);
                for (int c : m.class_bijection) {
                    if (c < 0 || c >= m.psi_classes.count || seen[c])
                        return {false, ng.name + ": class map is not a bijection"};
                    seen[c] = true;
                }
                for (int y = 0; y < ng.group->n; ++y)
                    if (m.psi_classes.class_of[ng.group->mul(y, x)] !=
                        m.class_bijection[m.phi_classes.class_of[y]])
                        return {false, ng.name + ": bijection misroutes a class"};
            }
        }
    }
    return {true, std::to_string(checked) + " (group, automorphism, element) triples"};
}

// 4: single class exactly when the fixed subgroup is trivial, and the
// orbit-stabilizer balance, over the full order <= 24 sweep.
Outcome check_fixed_subgroup_balance() {
    long long autos_total = 0;
    for (const auto& ng : corpus()) {
        if (ng.group->n > 24) continue;
        const AutEnumeration& en = autos_for(ng);
        if (!en.complete) return {false, ng.name + ": enumeration incomplete"};
        for (const auto& phi : en.autos) {
            ++autos_total;
            ReidemeisterPartition p = twisted_classes(phi);
            Subgroup fix = fixed_subgroup(phi);
            if ((p.count > 1) != (fix.size() > 1))
                return {false, ng.name + ": single-class test disagrees with the fixed subgroup"};
            auto classes = p.classes();
            for (int x = 0; x < ng.group->n; ++x) {
                Subgroup stab = twisted_stabilizer(phi, x);
                if ((long long)classes[p.class_of[x]].size() * stab.size() != ng.group->n)
                    return {false, ng.name + ": orbit-stabilizer product is off at element " +
                                       std::to_string(x)};
            }
        }
    }
    return {true, std::to_string(autos_total) + " automorphisms"};
}

// 5: class count sum over shifted restrictions, for invariant subgroups whose
// quotient map moves every nontrivial coset.
Outcome check_extension_sum() {
    struct PairSpec {
        const char* gamma;
        int member_order;   // pick subgroup generated by elements of this order
        int subgroup_size;  // expected |H|
    };
    const std::vector<PairSpec> specs{
        {"C9", 3, 3}, {"C3xC3", 3, 3}, {"C15", 5, 5},        {"C21", 7, 7},
        {"A4", 2, 4}, {"SL23", 4, 8},  {"C2xC2xC2xC2", 2, 4}};
    int pairs_passed = 0;
    std::string detail;
    for (const auto& spec : specs) {
        GroupPtr gamma = corpus_group(spec.gamma);
        Subgroup h = [&] {
            // accumulate generators of the requested order until |H| matches
            std::vector<int> gens;
            Subgroup probe = generated_subgroup(gamma, gens);
            for (int x = 1; x < gamma->n && probe.size() < spec.subgroup_size; ++x) {
                if (gamma->element_order(x) != spec.member_order) continue;
                if (probe.contains(x)) continue;
                gens.push_back(x);
                probe = generated_subgroup(gamma, gens);
                if (probe.size() > spec.subgroup_size) {
                    gens.pop_back();
                    probe = generated_subgroup(gamma, gens);
                }
            }
            return probe;
        }();
        if (h.size() != spec.subgroup_size)
            return {false, std::string(spec.gamma) + ": unexpected subgroup size"};
        const AutEnumeration& en = autos_for({spec.gamma, gamma});
        bool found = false;
        for (const auto& phi : en.autos) {
            bool invariant = true;
            for (int m : h.members)
                if (!h.contains(phi(m))) { invariant = false; break; }
            if (!invariant) continue;
            ExtensionReport rep = extension_sum_check(phi, h);
            if (!rep.projection_maps_classes_onto_classes)
                return {false, std::string(spec.gamma) + ": projection misses a class"};
            if (!rep.quotient_fixed_trivial) continue;
            if (!rep.sum_formula_holds || !rep.restriction_classes_are_intersections)
                return {false, std::string(spec.gamma) + ": sum decomposition failed"};
            int sum = std::accumulate(rep.summands.begin(), rep.summands.end(), 0);
            if (sum != rep.r_phi)
                return {false, std::string(spec.gamma) + ": summands do not add up"};
            found = true;
        }
        if (found) {
            ++pairs_passed;
            if (!detail.empty()) detail += ", ";
            detail += spec.gamma;
        }
    }
    if (pairs_passed < 5)
        return {false, "only " + std::to_string(pairs_passed) + " extensions verified"};
    return {true, std::to_string(pairs_passed) + " extensions: " + detail};
}

// 6: lattice automorphisms: exact diagonalization round trip, class count
// against |det(I-d)|, windowed equivalence, dual count.
Outcome check_lattice_roundtrip() {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        int k = 1 + i % 4;
        IntMatrix d = random_finite_order_unimodular(rng, k);
        CheckReport rep = zk_roundtrip_check(d, 777000 + i);
        if (rep.verdict != "pass")
            return {false, "matrix " + std::to_string(i) + ": " + rep.detail};
    }
    return {true, "200 random finite-order unimodular matrices, k up to 4"};
}

// 7: witness generator on the order-2 lamplighter reflection.
Outcome check_witness_generator() {
    const WreathAutomorphism& phi = bundled_scenario("lamp2_reflect").phi;
    SigmaElement sigma0 = sigma_canonical(*phi.group, {{{1}, 1}, {{-1}, 1}});
    auto t0 = Clock::now();
    WitnessBatch batch = fixed_witness_generator(phi, sigma0, {1}, 10);
    double dt = seconds_since(t0);
    if (batch.witnesses.size() != 10) return {false, "short witness batch"};
    std::set<SigmaElement> distinct;
    std::set<Point> support_union;
    for (const auto& w : batch.witnesses) {
        if (!(apply_sigma_automorphism(phi, w) == w)) return {false, "witness is not fixed"};
        if (!distinct.insert(w).second) return {false, "repeated witness"};
        for (const auto& p : w.support())
            if (!support_union.insert(p).second) return {false, "supports overlap"};
    }
    long long diam = sigma_diameter(sigma0);
    long long prev = 0;
    for (long long n : batch.multipliers) {
        if (n <= prev) return {false, "multipliers are not increasing"};
        prev = n;
        // orbit points of n*m under d must sit strictly more than 2*diam apart
        Point p{n};
        std::vector<Point> orbit{p};
        for (int j = 1; j < batch.orbit_length; ++j) {
            p = phi.apply_d(p);
            orbit.push_back(p);
        }
        for (size_t i = 0; i < orbit.size(); ++i)
            for (size_t j = i + 1; j < orbit.size(); ++j) {
                long long dist = 0;
                for (size_t c = 0; c < orbit[i].size(); ++c)
                    dist = std::max(dist, std::llabs(orbit[i][c] - orbit[j][c]));
                if (dist <= 2 * diam) return {false, "multiplier separation is not strict"};
            }
    }
    if (dt >= 1.0) return {false, "witness batch took too long"};
    char buf[96];
    std::snprintf(buf, sizeof buf, "10 witnesses, disjoint supports, %.3fs", dt);
    return {true, buf};
}

// 8: the coordinate predicate against a bounded twisted-equivalence search.
Outcome check_separation_predicate() {
    const WreathAutomorphism& phi = bundled_scenario("lamp5_times2").phi;
    GroupPtr g = phi.group;
    SeparationReport rep = separation_pipeline(phi, 4);
    if (!rep.all_one) return {false, "no single-class evidence on the base classes"};

    // conjugation moves by the standard generators of the wreath product
    std::vector<WreathElement> moves;
    moves.push_back({sigma_delta(*g, {0}, 1), {0}});
    moves.push_back({sigma_delta(*g, {0}, g->inv(1)), {0}});
    moves.push_back({{}, {1}});
    moves.push_back({{}, {-1}});

    auto twisted_move = [&](const WreathElement& u, const WreathElement& x) {
        WreathElement ux = wreath_mul(*g, u, x);
        return wreath_mul(*g, ux, wreath_inverse(*g, apply_automorphism(phi, u)));
    };
    auto ball = [&](const WreathElement& x) {
        std::set<WreathElement> seen{x};
        std::vector<WreathElement> frontier{x};
        for (int depth = 0; depth < 4; ++depth) {
            std::vector<WreathElement> next;
            for (const auto& y : frontier)
                for (const auto& u : moves) {
                    WreathElement z = twisted_move(u, y);
                    if (seen.insert(z).second) next.push_back(z);
                }
            frontier = std::move(next);
        }
        return seen;
    };

    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long long> pd(-4, 4);
    std::uniform_int_distribution<int> gd(0, g->n - 1);
    std::uniform_int_distribution<int> cnt(0, 3);
    std::uniform_int_distribution<long long> zd(-2, 2);
    std::uniform_int_distribution<size_t> md(0, moves.size() - 1);
    auto random_element = [&] {
        std::vector<std::pair<Point, int>> entries;
        int m = cnt(rng);
        for (int i = 0; i < m; ++i) entries.emplace_back(Point{pd(rng)}, gd(rng));
        return WreathElement{sigma_canonical(*g, entries), {zd(rng)}};
    };

    int equivalent_pairs = 0;
    for (int t = 0; t < 1000; ++t) {
        WreathElement x = random_element();
        WreathElement y;
        if (t % 2 == 0) {
            y = random_element();
        } else {
            y = x;
            int len = 1 + t % 4;
            for (int i = 0; i < len; ++i) y = twisted_move(moves[md(rng)], y);
        }
        bool merged = ball(x).count(y) > 0;
        bool predicted_same = rep.same_class(x, y);
        if (merged) {
            ++equivalent_pairs;
            if (!predicted_same)
                return {false, "bounded search joined a pair the predicate separates"};
        }
    }
    return {true, "1000 pairs, " + std::to_string(equivalent_pairs) +
                      " joined within word length 4, zero violations"};
}

// 9: iterated application against the accumulated-cocycle closed form.
Outcome check_iteration_identities() {
    std::mt19937_64 rng(99);
    long long instances = 0;
    for (const auto& bs : bundled_scenarios()) {
        const WreathAutomorphism& phi = bs.phi;
        long long box = std::min<long long>(phi.window / 4, 8);
        if (box < 1) box = 1;
        std::uniform_int_distribution<long long> md(-box, box);
        std::uniform_int_distribution<int> hd(0, phi.group->n - 1);
        std::uniform_int_distribution<int> qd(1, phi.cert.d_order);
        for (int t = 0; t < 500; ++t) {
            Point m(phi.k);
            for (auto& c : m) c = md(rng);
            IterationReport rep = iterate_formula_check(phi, m, hd(rng), qd(rng));
            ++instances;
            if (!rep.equal)
                return {false, bs.name + ": iterate and closed form disagree"};
            if (!rep.supports_equal)
                return {false, bs.name + ": support identity fails"};
        }
    }
    return {true, std::to_string(instances) + " randomized instances across " +
                      std::to_string(bundled_scenarios().size()) + " scenarios"};
}

// 10: fixed-point-free induced maps on the origin closure force solvability,
// and fixed-point-free automorphisms in the corpus only occur on solvable
// groups.
Outcome check_solvability_pipeline() {
    std::set<std::string> fpf_found;
    for (const auto& bs : bundled_scenarios()) {
        SolvabilityReport rep = solvability_check(bs.phi);
        if (!rep.scenario_based) return {false, bs.name + ": no closure route"};
        if (rep.induced_fixed_trivial) {
            fpf_found.insert(bs.name);
            if (!rep.closure_solvable)
                return {false, bs.name + ": closure derived series does not terminate"};
            if (!rep.base_solvable) return {false, bs.name + ": base group is not solvable"};
        }
    }
    const std::set<std::string> expected{"lamp5_times2", "lamp7_times3", "lamp_z3sq_inv",
                                         "wreath_z2sq_rot"};
    if (fpf_found != expected) {
        std::string got;
        for (const auto& n : fpf_found) got += n + " ";
        return {false, "unexpected fixed-point-free set: " + got};
    }
    // corpus-wide consistency: a fixed-point-free automorphism implies a
    // terminating derived series
    for (const auto& ng : corpus()) {
        const AutEnumeration& en = autos_for(ng);
        bool has_fpf = false;
        for (const auto& phi : en.autos)
            if (fixed_subgroup(phi).is_trivial()) { has_fpf = true; break; }
        if (has_fpf && !derived_series(ng.group).solvable)
            return {false, ng.name + ": fixed-point-free automorphism on an unsolvable group"};
    }
    return {true, "4 scenarios with fixed-point-free closure maps, corpus consistent"};
}

} // namespace

int main() {
    struct Entry {
        const char* label;
        Outcome (*fn)();
    };
    const std::vector<Entry> entries{
        {"class count equals fixed irreducible characters", check_class_count_vs_characters},
        {"fixed characters equal fixed classes", check_fixed_characters_vs_fixed_classes},
        {"shift map is a class bijection", check_shift_bijection},
        {"fixed subgroup test and orbit-stabilizer balance", check_fixed_subgroup_balance},
        {"class count sums over shifted restrictions", check_extension_sum},
        {"lattice diagonalization round trip", check_lattice_roundtrip},
        {"fixed witness generator", check_witness_generator},
        {"separation predicate vs bounded search", check_separation_predicate},
        {"iteration closed form", check_iteration_identities},
        {"solvability pipeline", check_solvability_pipeline},
    };
    int failures = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        Outcome o;
        try {
            o = entries[i].fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                    entries[i].label, o.note.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures;
}
