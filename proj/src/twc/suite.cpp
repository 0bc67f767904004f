#include "suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "autenum.hpp"
#include "chartable.hpp"
#include "errors.hpp"
#include "scenarios.hpp"
#include "twisted.hpp"

namespace twc {

using nlohmann::json;

namespace {

constexpr long long kAutBudget = 100000;

struct SuiteState {
    std::uint64_t seed = 0;
    std::string filter;
    std::vector<CheckReport> reports;
    int failures = 0;
    std::map<std::string, AutEnumeration> aut_cache;
    std::map<std::string, CharacterTable> table_cache;

    const AutEnumeration& auts(const std::string& name) {
        auto it = aut_cache.find(name);
        if (it == aut_cache.end())
            it = aut_cache.emplace(name, enumerate_automorphisms(corpus_group(name), kAutBudget, seed))
                     .first;
        return it->second;
    }

    const CharacterTable& table(const std::string& name) {
        auto it = table_cache.find(name);
        if (it == table_cache.end())
            it = table_cache.emplace(name, character_table(corpus_group(name))).first;
        return it->second;
    }

    bool selected(const std::string& group_name) const {
        return filter.empty() || filter == group_name;
    }

    void report(const std::string& id, const std::string& scope, bool pass, json detail) {
        if (!pass) ++failures;
        reports.push_back({id, scope, pass ? "pass" : "fail", detail.dump()});
    }

    void skip(const std::string& id, const std::string& scope, const std::string& why) {
        reports.push_back({id, scope, "skip", json{{"reason", why}}.dump()});
    }

    std::mt19937_64 rng_for(const std::string& tag) const {
        std::uint64_t h = 1469598103934665603ull;
        for (char ch : tag) h = (h ^ (unsigned char)ch) * 1099511628211ull;
        return std::mt19937_64(seed ^ h);
    }
};

json aut_json(const Automorphism& phi) { return json(phi.image); }

// ---- corpus-valid ----------------------------------------------------------

const std::map<int, int>& expected_order_counts() {
    static const std::map<int, int> m{{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},
                                      {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2},
                                      {15, 1}, {16, 14}, {17, 1}, {18, 5}, {19, 1}, {20, 5}, {21, 2},
                                      {22, 2}, {23, 1}, {24, 15}, {60, 1}};
    return m;
}

void check_corpus_valid(SuiteState& s) {
    const char* id = "corpus-valid";
    if (!s.filter.empty()) {
        GroupPtr g = corpus_group(s.filter);
        bool ok = true;
        std::string err;
        try {
            BuildOptions o;
            o.name = g->name;
            build_group_flat(g->n, g->table, o);
        } catch (const Error& e) {
            ok = false;
            err = e.what();
        }
        s.report(id, s.filter, ok, json{{"group", s.filter}, {"order", g->n}, {"error", err}});
        return;
    }
    std::map<int, std::vector<std::string>> by_order;
    for (const auto& ng : corpus()) by_order[ng.group->n].push_back(ng.name);
    for (const auto& [order, expected] : expected_order_counts()) {
        auto it = by_order.find(order);
        int got = it == by_order.end() ? 0 : (int)it->second.size();
        bool ok = got == expected;
        json names = it == by_order.end() ? json::array() : json(it->second);
        if (ok) {
            for (const auto& name : it->second) {
                try {
                    GroupPtr g = corpus_group(name);
                    BuildOptions o;
                    o.name = name;
                    build_group_flat(g->n, g->table, o);
                } catch (const Error& e) {
                    ok = false;
                    names = json{{"group", name}, {"error", e.what()}};
                    break;
                }
            }
        }
        s.report(id, "order " + std::to_string(order), ok,
                 json{{"order", order}, {"expected", expected}, {"got", got}, {"names", names}});
    }
    bool extra = false;
    for (const auto& [order, names] : by_order)
        if (!expected_order_counts().count(order)) extra = true;
    s.report(id, "order coverage", !extra, json{{"total", corpus().size()}});
}

// ---- corpus-distinct -------------------------------------------------------

void check_corpus_distinct(SuiteState& s) {
    const char* id = "corpus-distinct";
    if (!s.filter.empty()) {
        s.skip(id, s.filter, "corpus-wide check, not run under a group filter");
        return;
    }
    std::map<int, std::vector<const NamedGroup*>> by_order;
    for (const auto& ng : corpus()) by_order[ng.group->n].push_back(&ng);
    for (const auto& [order, bucket] : by_order) {
        if (bucket.size() < 2) continue;
        bool ok = true;
        json bad;
        for (size_t i = 0; i < bucket.size() && ok; ++i)
            for (size_t j = i + 1; j < bucket.size() && ok; ++j)
                if (isomorphic(*bucket[i]->group, *bucket[j]->group)) {
                    ok = false;
                    bad = json{{"first", bucket[i]->name}, {"second", bucket[j]->name}};
                }
        s.report(id, "order " + std::to_string(order), ok,
                 json{{"order", order}, {"groups", bucket.size()}, {"collision", bad}});
    }
}

// ---- lemma-shift -----------------------------------------------------------

void check_lemma_shift(SuiteState& s) {
    const char* id = "lemma-shift";
    for (const auto& ng : corpus()) {
        if (ng.group->n > 16 || !s.selected(ng.name)) continue;
        const FiniteGroup& g = *ng.group;
        const AutEnumeration& en = s.auts(ng.name);
        bool ok = en.complete;
        json bad;
        if (!ok) bad = json{{"error", "automorphism enumeration truncated"}};
        for (const Automorphism& phi : en.autos) {
            if (!ok) break;
            for (int x = 0; x < g.n && ok; ++x) {
                ShiftClassMap sm = shift_class_map(phi, x);
                if (sm.phi_classes.count != sm.psi_classes.count) {
                    ok = false;
                    bad = json{{"aut", aut_json(phi)}, {"x", x}, {"r_phi", sm.phi_classes.count},
                               {"r_psi", sm.psi_classes.count}};
                    break;
                }
                std::vector<int> seen((size_t)sm.psi_classes.count, 0);
                for (int c = 0; c < sm.phi_classes.count; ++c) seen[(size_t)sm.class_bijection[(size_t)c]]++;
                for (int c = 0; c < sm.psi_classes.count && ok; ++c)
                    if (seen[(size_t)c] != 1) {
                        ok = false;
                        bad = json{{"aut", aut_json(phi)}, {"x", x}, {"class", c}, {"hits", seen[(size_t)c]}};
                    }
                for (int y = 0; y < g.n && ok; ++y)
                    if (sm.psi_classes.class_of[(size_t)g.mul(y, x)] !=
                        sm.class_bijection[(size_t)sm.phi_classes.class_of[(size_t)y]]) {
                        ok = false;
                        bad = json{{"aut", aut_json(phi)}, {"x", x}, {"y", y}};
                    }
            }
        }
        s.report(id, ng.name, ok,
                 json{{"group", ng.name}, {"automorphisms", en.autos.size()}, {"counterexample", bad}});
    }
}

// ---- lemma5-orbit-stabilizer -----------------------------------------------

void check_lemma5(SuiteState& s) {
    const char* id = "lemma5-orbit-stabilizer";
    for (const auto& ng : corpus()) {
        if (!s.selected(ng.name)) continue;
        const FiniteGroup& g = *ng.group;
        const AutEnumeration& en = s.auts(ng.name);
        bool ok = en.complete;
        json bad;
        if (!ok) bad = json{{"error", "automorphism enumeration truncated"}};
        for (const Automorphism& phi : en.autos) {
            if (!ok) break;
            ReidemeisterPartition p = twisted_classes(phi);
            Subgroup f = fixed_subgroup(phi);
            if ((p.count > 1) != (f.size() > 1)) {
                ok = false;
                bad = json{{"aut", aut_json(phi)}, {"r", p.count}, {"fixed", f.size()}};
                break;
            }
            std::vector<int> class_size((size_t)p.count, 0);
            for (int x = 0; x < g.n; ++x) class_size[(size_t)p.class_of[(size_t)x]]++;
            if (class_size[(size_t)p.class_of[(size_t)g.identity]] * f.size() != g.n) {
                ok = false;
                bad = json{{"aut", aut_json(phi)}, {"identity_class", class_size[(size_t)p.class_of[(size_t)g.identity]]},
                           {"fixed", f.size()}};
                break;
            }
            for (int x = 0; x < g.n && ok; ++x) {
                Subgroup st = twisted_stabilizer(phi, x);
                if (class_size[(size_t)p.class_of[(size_t)x]] * st.size() != g.n) {
                    ok = false;
                    bad = json{{"aut", aut_json(phi)}, {"x", x},
                               {"class_size", class_size[(size_t)p.class_of[(size_t)x]]},
                               {"stabilizer", st.size()}};
                }
            }
        }
        s.report(id, ng.name, ok,
                 json{{"group", ng.name}, {"automorphisms", en.autos.size()}, {"counterexample", bad}});
    }
}

// ---- tbft / brauer ---------------------------------------------------------

void check_tbft(SuiteState& s) {
    const char* id = "tbft";
    for (const auto& ng : corpus()) {
        if (!s.selected(ng.name)) continue;
        const CharacterTable& t = s.table(ng.name);
        const AutEnumeration& en = s.auts(ng.name);
        bool ok = en.complete;
        json bad;
        if (!ok) bad = json{{"error", "automorphism enumeration truncated"}};
        for (const Automorphism& phi : en.autos) {
            if (!ok) break;
            TbftReport r = tbft_check(t, phi);
            if (!r.equal) {
                ok = false;
                bad = json{{"aut", aut_json(phi)}, {"r", r.reidemeister_number},
                           {"fixed_characters", r.fixed_character_count}};
            }
        }
        s.report(id, ng.name, ok,
                 json{{"group", ng.name}, {"automorphisms", en.autos.size()}, {"counterexample", bad}});
    }
}

void check_brauer(SuiteState& s) {
    const char* id = "brauer";
    for (const auto& ng : corpus()) {
        if (!s.selected(ng.name)) continue;
        const CharacterTable& t = s.table(ng.name);
        const AutEnumeration& en = s.auts(ng.name);
        bool ok = en.complete;
        json bad;
        for (const Automorphism& phi : en.autos) {
            if (!ok) break;
            DualAction da = dual_action(t, phi);
            if (da.fixed_classes != da.fixed_characters) {
                ok = false;
                bad = json{{"aut", aut_json(phi)}, {"fixed_classes", da.fixed_classes},
                           {"fixed_characters", da.fixed_characters}};
            }
        }
        s.report(id, ng.name, ok,
                 json{{"group", ng.name}, {"automorphisms", en.autos.size()}, {"counterexample", bad}});
    }
}

// ---- rowley / odd-solvable -------------------------------------------------

void check_rowley(SuiteState& s) {
    const char* id = "rowley";
    for (const auto& ng : corpus()) {
        if (!s.selected(ng.name)) continue;
        const AutEnumeration& en = s.auts(ng.name);
        int fpf = 0;
        for (const Automorphism& phi : en.autos)
            if (fixed_subgroup(phi).size() == 1) ++fpf;
        DerivedSeries ds = derived_series(ng.group);
        bool ok = en.complete && (fpf == 0 || ds.solvable);
        s.report(id, ng.name, ok,
                 json{{"group", ng.name}, {"automorphisms", en.autos.size()},
                      {"fixed_point_free", fpf}, {"solvable", ds.solvable}});
    }
}

void check_odd_solvable(SuiteState& s) {
    const char* id = "odd-solvable";
    for (const auto& ng : corpus()) {
        if (ng.group->n % 2 == 0 || !s.selected(ng.name)) continue;
        DerivedSeries ds = derived_series(ng.group);
        s.report(id, ng.name, ds.solvable,
                 json{{"group", ng.name}, {"order", ng.group->n},
                      {"derived_length", ds.derived_length ? json(*ds.derived_length) : json()}});
    }
}

// ---- extension-sum ---------------------------------------------------------

struct ExtensionPairSpec {
    const char* gamma;
    const char* h_rule; // "order:<k>" single generator, "all<=:<k>" every element of order <= k
    bool expect_fpf;
};

const std::vector<ExtensionPairSpec>& extension_pairs() {
    static const std::vector<ExtensionPairSpec> p{
        {"C9", "order:3", true},        {"C3xC3", "order:3", true},
        {"C15", "order:5", true},       {"C21", "order:7", true},
        {"A4", "all<=:2", true},        {"SL23", "all<=:4", true},
        {"C2xC2xC2xC2", "pair:2", true}, {"Dic3", "order:3", false},
        {"S3", "order:3", false}};
    return p;
}

std::vector<int> pick_subgroup_generators(const FiniteGroup& g, const std::string& rule) {
    auto colon = rule.find(':');
    std::string kind = rule.substr(0, colon);
    int k = std::stoi(rule.substr(colon + 1));
    std::vector<int> gens;
    if (kind == "order") {
        for (int x = 0; x < g.n; ++x)
            if (g.element_order(x) == k) return {x};
    } else if (kind == "all<=") {
        for (int x = 0; x < g.n; ++x)
            if (g.element_order(x) <= k) gens.push_back(x);
        return gens;
    } else if (kind == "pair") {
        for (int x = 0; x < g.n && gens.size() < 2; ++x)
            if (g.element_order(x) == k) gens.push_back(x);
        return gens;
    }
    throw ComputationFailedError("no subgroup generators matched rule " + rule);
}

void check_extension_sum(SuiteState& s) {
    const char* id = "extension-sum";
    for (const auto& spec : extension_pairs()) {
        if (!s.selected(spec.gamma)) continue;
        GroupPtr gamma = corpus_group(spec.gamma);
        Subgroup h = generated_subgroup(gamma, pick_subgroup_generators(*gamma, spec.h_rule));
        std::string scope = std::string(spec.gamma) + " / H" + std::to_string(h.size());
        const AutEnumeration& en = s.auts(spec.gamma);
        bool ok = en.complete && is_normal(h);
        json bad;
        int invariant = 0, fpf = 0;
        for (const Automorphism& phi : en.autos) {
            if (!ok) break;
            bool inv = true;
            for (int m : h.members)
                if (!h.contains(phi.image[(size_t)m])) {
                    inv = false;
                    break;
                }
            if (!inv) continue;
            ++invariant;
            ExtensionReport er = extension_sum_check(phi, h);
            if (!er.projection_maps_classes_onto_classes) {
                ok = false;
                bad = json{{"aut", aut_json(phi)}, {"failed", "projection-onto"}};
                break;
            }
            if (er.quotient_fixed_trivial) {
                ++fpf;
                if (!er.sum_formula_holds || !er.restriction_classes_are_intersections) {
                    ok = false;
                    bad = json{{"aut", aut_json(phi)},
                               {"failed", er.sum_formula_holds ? "intersections" : "sum-formula"},
                               {"r_phi", er.r_phi}, {"summands", er.summands}};
                    break;
                }
            } else if (!er.count_bound_holds) {
                ok = false;
                bad = json{{"aut", aut_json(phi)}, {"failed", "count-bound"},
                           {"r_restriction", er.r_restriction}, {"r_phi", er.r_phi},
                           {"quotient_fixed", er.quotient_fixed_order}};
                break;
            }
        }
        if (ok && spec.expect_fpf && fpf == 0) {
            ok = false;
            bad = json{{"failed", "no automorphism with fixed-point-free quotient action"}};
        }
        if (ok && !spec.expect_fpf && fpf != 0) {
            ok = false;
            bad = json{{"failed", "unexpected fixed-point-free quotient action"}, {"count", fpf}};
        }
        s.report(id, scope, ok,
                 json{{"gamma", spec.gamma}, {"h_members", h.members}, {"invariant_automorphisms", invariant},
                      {"fpf_quotient_automorphisms", fpf}, {"counterexample", bad}});
    }
}

// ---- char-orthogonality ----------------------------------------------------

void check_char_orthogonality(SuiteState& s) {
    const char* id = "char-orthogonality";
    for (const auto& ng : corpus()) {
        if (!s.selected(ng.name)) continue;
        const CharacterTable& t = s.table(ng.name);
        const ConjugacyClassData& cls = t.classes;
        int rows = (int)t.values.size(), cols = cls.count;
        long long e = t.exponent;
        bool ok = true;
        json bad;
        for (int i = 0; i < rows && ok; ++i)
            for (int j = i; j < rows && ok; ++j) {
                CycInt sum = CycInt::zero(e);
                for (int c = 0; c < cols; ++c) {
                    CycInt term = t.values[(size_t)i][(size_t)c] * t.values[(size_t)j][(size_t)c].conjugate();
                    sum = sum + term * CycInt::integer(e, cls.sizes[(size_t)c]);
                }
                CycInt want = CycInt::integer(e, i == j ? ng.group->n : 0);
                if (!(sum == want)) {
                    ok = false;
                    bad = json{{"relation", "row"}, {"i", i}, {"j", j}};
                }
            }
        for (int c = 0; c < cols && ok; ++c)
            for (int d = c; d < cols && ok; ++d) {
                CycInt sum = CycInt::zero(e);
                for (int i = 0; i < rows; ++i)
                    sum = sum + t.values[(size_t)i][(size_t)c] * t.values[(size_t)i][(size_t)d].conjugate();
                long long want = c == d ? ng.group->n / cls.sizes[(size_t)c] : 0;
                if (!(sum == CycInt::integer(e, want))) {
                    ok = false;
                    bad = json{{"relation", "column"}, {"c", c}, {"d", d}};
                }
            }
        s.report(id, ng.name, ok,
                 json{{"group", ng.name}, {"irreducibles", rows}, {"counterexample", bad}});
    }
}

// ---- zk-roundtrip ----------------------------------------------------------

} // namespace

IntMatrix random_finite_order_unimodular(std::mt19937_64& rng, int k) {
    // block diagonal core: signed 1x1 blocks and order-3/4/6 2x2 companions
    std::vector<std::vector<long long>> core((size_t)k, std::vector<long long>((size_t)k, 0));
    int pos = 0;
    while (pos < k) {
        if (k - pos >= 2 && rng() % 2 == 0) {
            static const long long comps[4][4] = {
                {0, -1, 1, -1}, // order 3
                {0, -1, 1, 0},  // order 4
                {0, -1, 1, 1},  // order 6
                {0, 1, 1, 0},   // swap, order 2
            };
            const long long* b = comps[rng() % 4];
            core[(size_t)pos][(size_t)pos] = b[0];
            core[(size_t)pos][(size_t)pos + 1] = b[1];
            core[(size_t)pos + 1][(size_t)pos] = b[2];
            core[(size_t)pos + 1][(size_t)pos + 1] = b[3];
            pos += 2;
        } else {
            core[(size_t)pos][(size_t)pos] = rng() % 2 == 0 ? 1 : -1;
            pos += 1;
        }
    }
    IntMatrix w = IntMatrix::from_rows(core);
    IntMatrix sm = IntMatrix::identity(k);
    IntMatrix sm_inv = IntMatrix::identity(k);
    int shears = 1 + (int)(rng() % 3);
    for (int t = 0; t < shears && k > 1; ++t) {
        int i = (int)(rng() % (unsigned)k), j = (int)(rng() % (unsigned)k);
        if (i == j) continue;
        long long c = (long long)(rng() % 5) - 2;
        std::vector<std::vector<long long>> sh((size_t)k, std::vector<long long>((size_t)k, 0));
        std::vector<std::vector<long long>> sh_inv = sh;
        for (int a = 0; a < k; ++a) sh[(size_t)a][(size_t)a] = sh_inv[(size_t)a][(size_t)a] = 1;
        sh[(size_t)i][(size_t)j] = c;
        sh_inv[(size_t)i][(size_t)j] = -c;
        sm = sm * IntMatrix::from_rows(sh);
        sm_inv = IntMatrix::from_rows(sh_inv) * sm_inv;
    }
    return sm * w * sm_inv;
}

CheckReport zk_roundtrip_check(const IntMatrix& d, std::uint64_t pair_seed) {
    int k = d.k;
    json detail{{"k", k}, {"d", d.to_rows()}, {"pair_seed", pair_seed}};
    auto fail = [&](const std::string& why, json extra = json::object()) {
        detail["failed"] = why;
        detail["extra"] = extra;
        return CheckReport{"zk-roundtrip", "k=" + std::to_string(k), "fail", detail.dump()};
    };

    IntMatrix m = IntMatrix::identity(k) - d;
    SmithDecomposition snf = smith_normal_form(m);
    if (!(snf.u * m * snf.v == snf.d)) return fail("smith round-trip");
    BigInt du = snf.u.determinant(), dv = snf.v.determinant();
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return fail("unimodular witnesses");

    BigInt det = m.determinant();
    ZkClassData zk = reidemeister_zk(d);
    detail["det"] = det.str();
    if (det == 0) {
        if (zk.finite || zk.fixed_sublattice_trivial) return fail("singular case flags");
        detail["classes"] = "infinite";
        return {"zk-roundtrip", "k=" + std::to_string(k), "pass", detail.dump()};
    }
    BigInt adet = det < 0 ? -det : det;
    if (!zk.finite || !zk.quotient || !zk.fixed_sublattice_trivial) return fail("finite case flags");
    if (zk.count != adet) return fail("count vs determinant", {{"count", zk.count.str()}});
    const FiniteAbelianQuotient& q = *zk.quotient;
    if (q.order != adet) return fail("quotient order");
    detail["classes"] = zk.count.str();

    // windowed points bucketed by residue; same-residue pairs must differ by
    // an exact integer solution of (I-d) w = x - y, cross pairs must not
    std::vector<std::vector<long long>> pts;
    {
        long long box = 2;
        std::vector<long long> cur((size_t)k, -box);
        while (true) {
            pts.push_back(cur);
            int t = 0;
            while (t < k && cur[(size_t)t] == box) cur[(size_t)t++] = -box;
            if (t == k) break;
            ++cur[(size_t)t];
        }
    }
    std::map<std::vector<BigInt>, std::vector<int>> buckets;
    for (int i = 0; i < (int)pts.size(); ++i) buckets[q.project_ll(pts[(size_t)i])].push_back(i);
    detail["residues_in_window"] = buckets.size();

    std::mt19937_64 rng(pair_seed);
    auto diff_of = [&](int a, int b) {
        std::vector<BigInt> v((size_t)k);
        for (int t = 0; t < k; ++t) v[(size_t)t] = BigInt(pts[(size_t)a][(size_t)t] - pts[(size_t)b][(size_t)t]);
        return v;
    };
    std::vector<const std::vector<int>*> bucket_list;
    for (const auto& [r, idx] : buckets) bucket_list.push_back(&idx);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& bucket = *bucket_list[(size_t)(rng() % bucket_list.size())];
        if (bucket.size() < 2) continue;
        int a = bucket[(size_t)(rng() % bucket.size())];
        int b = bucket[(size_t)(rng() % bucket.size())];
        auto diff = diff_of(a, b);
        auto w = solve_integer(m, diff);
        if (!w) return fail("same residue without witness", {{"a", pts[(size_t)a]}, {"b", pts[(size_t)b]}});
        if (m.apply(*w) != diff) return fail("witness does not verify");
    }
    for (int trial = 0; trial < 200 && bucket_list.size() > 1; ++trial) {
        size_t ba = rng() % bucket_list.size(), bb = rng() % bucket_list.size();
        if (ba == bb) continue;
        int a = (*bucket_list[ba])[(size_t)(rng() % bucket_list[ba]->size())];
        int b = (*bucket_list[bb])[(size_t)(rng() % bucket_list[bb]->size())];
        if (solve_integer(m, diff_of(a, b)))
            return fail("cross residue with witness", {{"a", pts[(size_t)a]}, {"b", pts[(size_t)b]}});
    }

    if (k == 1) {
        // literal union-find brute force on a segment covering every class
        long long step = 0;
        {
            auto rows = m.to_rows();
            step = rows[0][0];
        }
        if (step < 0) step = -step;
        long long b1 = step + 2;
        int npts = (int)(2 * b1 + 1);
        std::vector<int> parent((size_t)npts);
        for (int i = 0; i < npts; ++i) parent[(size_t)i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[(size_t)x] != x) x = parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
            return x;
        };
        for (int i = 0; i + (int)step < npts; ++i) parent[(size_t)find(i)] = find(i + (int)step);
        std::set<int> roots;
        for (int i = 0; i < npts; ++i) roots.insert(find(i));
        if (BigInt((long long)roots.size()) != adet)
            return fail("segment brute force", {{"components", roots.size()}});
    }

    BigInt dual = dual_fixed_count_abelian(q, d);
    if (dual != q.order) return fail("dual fixed-character count", {{"dual", dual.str()}});
    return {"zk-roundtrip", "k=" + std::to_string(k), "pass", detail.dump()};
}

namespace {

void check_zk_roundtrip(SuiteState& s) {
    const char* id = "zk-roundtrip";
    if (!s.filter.empty()) {
        s.skip(id, s.filter, "lattice check, not group-scoped");
        return;
    }
    std::mt19937_64 rng = s.rng_for(id);
    for (int i = 0; i < 50; ++i) {
        int k = 1 + i % 4;
        IntMatrix d = random_finite_order_unimodular(rng, k);
        CheckReport r = zk_roundtrip_check(d, s.seed * 1000003ull + (std::uint64_t)i);
        r.scope = "matrix " + std::to_string(i) + " (k=" + std::to_string(k) + ")";
        if (r.verdict == "fail") ++s.failures;
        s.reports.push_back(std::move(r));
    }
}

// ---- wreath-laws -----------------------------------------------------------

struct ScenarioExpectation {
    const char* name;
    long long order_on_window;
    bool order_matches;
};

const std::vector<ScenarioExpectation>& scenario_expectations() {
    static const std::vector<ScenarioExpectation> e{
        {"lamp2_reflect", 2, true},   {"lamp2_identity", 1, true}, {"lamp5_times2", 4, false},
        {"lamp7_times3", 6, false},   {"lamp_z3sq_inv", 2, true},  {"wreath_z2sq_rot", 3, true},
        {"wreath_z3_rot", 3, true},   {"wreath_s3_cocycle", 2, true}, {"wreath_a5", 2, true}};
    return e;
}

WreathElement random_wreath_element(std::mt19937_64& rng, const WreathAutomorphism& phi,
                                    long long box, long long zbox) {
    SigmaElement sigma;
    int entries = (int)(rng() % 4);
    for (int t = 0; t < entries; ++t) {
        Point p((size_t)phi.k);
        for (int i = 0; i < phi.k; ++i) p[(size_t)i] = (long long)(rng() % (2 * box + 1)) - box;
        sigma.entries.emplace_back(p, (int)(rng() % (unsigned)phi.group->n));
    }
    WreathElement x;
    x.sigma = sigma_canonical(*phi.group, sigma.entries);
    x.z.resize((size_t)phi.k);
    for (int i = 0; i < phi.k; ++i) x.z[(size_t)i] = (long long)(rng() % (2 * zbox + 1)) - zbox;
    return x;
}

void check_wreath_laws(SuiteState& s) {
    const char* id = "wreath-laws";
    for (const auto& exp : scenario_expectations()) {
        const BundledScenario& sc = bundled_scenario(exp.name);
        if (!s.filter.empty() && s.filter != sc.phi.group->name) {
            s.skip(id, exp.name, "scenario group does not match filter");
            continue;
        }
        const WreathAutomorphism& phi = sc.phi;
        bool ok = true;
        json bad;
        const WreathCertificate& c = phi.cert;
        if (!c.unimodular || !c.cocycle_consistent || !c.a0_injective_hom || !c.images_commute) {
            ok = false;
            bad = json{{"failed", "certificate flags"}};
        }
        if (ok && (c.base_order_on_window != exp.order_on_window || c.order_matches_base != exp.order_matches)) {
            ok = false;
            bad = json{{"failed", "windowed order"}, {"got", c.base_order_on_window},
                       {"expected", exp.order_on_window}};
        }
        std::mt19937_64 rng = s.rng_for(std::string(id) + "/" + exp.name);
        WreathElement e = wreath_identity(phi.k);
        for (int t = 0; t < 3000 && ok; ++t) {
            WreathElement x = random_wreath_element(rng, phi, 2, 1);
            WreathElement y = random_wreath_element(rng, phi, 2, 1);
            WreathElement z = random_wreath_element(rng, phi, 2, 1);
            if (!(wreath_mul(*phi.group, wreath_mul(*phi.group, x, y), z) ==
                  wreath_mul(*phi.group, x, wreath_mul(*phi.group, y, z)))) {
                ok = false;
                bad = json{{"failed", "associativity"}, {"trial", t}};
            }
        }
        for (int t = 0; t < 1000 && ok; ++t) {
            WreathElement x = random_wreath_element(rng, phi, 2, 1);
            WreathElement xi = wreath_inverse(*phi.group, x);
            if (!(wreath_mul(*phi.group, x, xi) == e) || !(wreath_mul(*phi.group, xi, x) == e)) {
                ok = false;
                bad = json{{"failed", "inverse"}, {"trial", t}};
            }
        }
        for (int t = 0; t < 1000 && ok; ++t) {
            WreathElement x = random_wreath_element(rng, phi, 2, 1);
            WreathElement y = random_wreath_element(rng, phi, 2, 1);
            if (!(apply_automorphism(phi, wreath_mul(*phi.group, x, y)) ==
                  wreath_mul(*phi.group, apply_automorphism(phi, x), apply_automorphism(phi, y)))) {
                ok = false;
                bad = json{{"failed", "homomorphism"}, {"trial", t}};
            }
        }
        long long mbox = std::min<long long>(phi.window / 4, 8);
        for (int t = 0; t < 25 && ok; ++t) {
            Point m((size_t)phi.k);
            for (int i = 0; i < phi.k; ++i) m[(size_t)i] = (long long)(rng() % (2 * mbox + 1)) - mbox;
            int h = (int)(rng() % (unsigned)phi.group->n);
            int q = 1 + (int)(rng() % (unsigned)std::max(1, phi.cert.d_order));
            IterationReport ir = iterate_formula_check(phi, m, h, q);
            if (!ir.equal || !ir.supports_equal) {
                ok = false;
                bad = json{{"failed", "iteration closed form"}, {"m", m}, {"h", h}, {"q", q}};
            }
        }
        if (ok) {
            int g0 = -1;
            for (int v = 0; v < phi.group->n && g0 < 0; ++v)
                if (v != phi.group->identity) g0 = v;
            Point e1((size_t)phi.k, 0);
            e1[0] = 1;
            for (const Point& p : {Point((size_t)phi.k, 0), e1}) {
                ClosureResult cr = sigma_closure(phi, sigma_delta(*phi.group, p, g0));
                if ((int)cr.elements.size() != cr.group->n) {
                    ok = false;
                    bad = json{{"failed", "closure element map"}, {"point", p}};
                    break;
                }
            }
        }
        s.report(id, exp.name, ok, json{{"scenario", exp.name}, {"counterexample", bad}});
    }
}

} // namespace

// ---- solvability -----------------------------------------------------------

SolvabilityReport solvability_check_group(const GroupPtr& g) {
    SolvabilityReport r;
    r.subject = g->name;
    r.scenario_based = false;
    DerivedSeries ds = derived_series(g);
    r.base_solvable = ds.solvable;
    r.base_derived_length = ds.derived_length ? *ds.derived_length : (int)ds.chain.size();
    return r;
}

SolvabilityReport solvability_check(const WreathAutomorphism& phi) {
    SolvabilityReport r = solvability_check_group(phi.group);
    r.scenario_based = true;
    ClosureResult cr = sigma_closure_g0(phi);
    r.closure_order = cr.group->n;
    r.induced_fixed_trivial = fixed_subgroup(cr.induced).size() == 1;
    DerivedSeries ds = derived_series(cr.group);
    r.closure_solvable = ds.solvable;
    r.closure_derived_length = ds.derived_length ? *ds.derived_length : (int)ds.chain.size();
    return r;
}

// ---- driver ----------------------------------------------------------------

const std::vector<std::string>& suite_check_ids() {
    static const std::vector<std::string> ids{
        "corpus-valid",   "corpus-distinct", "lemma-shift",        "lemma5-orbit-stabilizer",
        "tbft",           "brauer",          "rowley",             "odd-solvable",
        "extension-sum",  "char-orthogonality", "zk-roundtrip",    "wreath-laws"};
    return ids;
}

SuiteResult run_suite(const std::vector<std::string>& selection, const std::string& group_filter,
                      std::uint64_t seed) {
    for (const auto& id : selection) {
        const auto& ids = suite_check_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw ParseError("unknown check id \"" + id + "\"");
    }
    if (!group_filter.empty()) corpus_group(group_filter); // throws on unknown name
    SuiteState s;
    s.seed = seed;
    s.filter = group_filter;
    auto want = [&selection](const char* id) {
        return selection.empty() || std::find(selection.begin(), selection.end(), id) != selection.end();
    };
    if (want("corpus-valid")) check_corpus_valid(s);
    if (want("corpus-distinct")) check_corpus_distinct(s);
    if (want("lemma-shift")) check_lemma_shift(s);
    if (want("lemma5-orbit-stabilizer")) check_lemma5(s);
    if (want("tbft")) check_tbft(s);
    if (want("brauer")) check_brauer(s);
    if (want("rowley")) check_rowley(s);
    if (want("odd-solvable")) check_odd_solvable(s);
    if (want("extension-sum")) check_extension_sum(s);
    if (want("char-orthogonality")) check_char_orthogonality(s);
    if (want("zk-roundtrip")) check_zk_roundtrip(s);
    if (want("wreath-laws")) check_wreath_laws(s);
    SuiteResult out;
    out.seed = seed;
    out.reports = std::move(s.reports);
    out.failures = s.failures;
    return out;
}

} // namespace twc
