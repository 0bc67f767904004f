#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twisted/twisted.h"

using nlohmann::json;

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { twc_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct GroupHandle {
    twc_group* g = nullptr;
    ~GroupHandle() { twc_group_free(g); }
};

struct AutHandle {
    twc_aut* a = nullptr;
    ~AutHandle() { twc_aut_free(a); }
};

struct ScenarioHandle {
    twc_scenario* s = nullptr;
    ~ScenarioHandle() { twc_scenario_free(s); }
};

int exit_for(int code) {
    if (code == TWC_OK) return 0;
    std::fprintf(stderr, "error: %s\n", twc_last_error());
    return code == TWC_ERROR_PARSE ? 2 : 1;
}

std::string join_ints(const json& arr, const char* sep = " ") {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += v.dump();
    }
    return out;
}

std::string sigma_text(const json& wire) {
    if (wire.empty()) return "(identity)";
    std::string out;
    for (const auto& e : wire) {
        if (!out.empty()) out += " ";
        out += "g" + e["g"].dump() + "@(" + join_ints(e["point"], ",") + ")";
    }
    return out;
}

int load_group_aut(const std::string& gpath, const std::string& apath, GroupHandle& g, AutHandle& a) {
    if (int rc = twc_group_from_file(gpath.c_str(), &g.g)) return rc;
    return twc_aut_from_file(g.g, apath.c_str(), &a.a);
}

int run_classes(const std::string& gpath, const std::string& apath, bool json_out, bool reps_only) {
    GroupHandle g;
    AutHandle a;
    if (int rc = load_group_aut(gpath, apath, g, a)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_classes_report(g.g, a.a, &out.s)) return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("group: %s\n", j["group"].get<std::string>().c_str());
    std::printf("R(phi) = %d\n", j["count"].get<int>());
    if (reps_only) {
        std::printf("representatives: %s\n", join_ints(j["representatives"]).c_str());
    } else {
        int i = 0;
        for (const auto& cls : j["classes"]) {
            std::printf("class %d: rep %d, size %zu, members %s\n", i,
                        j["representatives"][(size_t)i].get<int>(), cls.size(), join_ints(cls).c_str());
            ++i;
        }
    }
    return 0;
}

int run_fixed(const std::string& gpath, const std::string& apath, bool json_out) {
    GroupHandle g;
    AutHandle a;
    if (int rc = load_group_aut(gpath, apath, g, a)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_fixed_report(g.g, a.a, &out.s)) return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("fixed subgroup order %d (%s)\n", j["order"].get<int>(),
                j["trivial"].get<bool>() ? "trivial" : "nontrivial");
    std::printf("members: %s\n", join_ints(j["members"]).c_str());
    return 0;
}

int run_char_table(const std::string& gpath, bool json_out) {
    GroupHandle g;
    if (int rc = twc_group_from_file(gpath.c_str(), &g.g)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_char_table_report(g.g, &out.s)) return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("group %s: %zu classes, exponent %lld\n", j["group"].get<std::string>().c_str(),
                j["class_sizes"].size(), j["exponent"].get<long long>());
    std::printf("class representatives: %s\n", join_ints(j["class_representatives"]).c_str());
    std::printf("class sizes: %s\n", join_ints(j["class_sizes"]).c_str());
    std::printf("degrees: %s\n", join_ints(j["degrees"]).c_str());
    std::printf("values (integer coordinates over the zeta-power basis):\n");
    int i = 0;
    for (const auto& row : j["values"]) {
        std::string line;
        for (const auto& v : row) {
            if (!line.empty()) line += " ";
            line += "[" + join_ints(v, ",") + "]";
        }
        std::printf("chi%d: %s\n", i++, line.c_str());
    }
    return 0;
}

int run_tbft(const std::string& gpath, const std::string& apath, bool json_out) {
    GroupHandle g;
    AutHandle a;
    if (int rc = load_group_aut(gpath, apath, g, a)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_tbft_report(g.g, a.a, &out.s)) return exit_for(rc);
    json j = json::parse(out.str());
    if (json_out)
        std::fputs(out.str().c_str(), stdout);
    else {
        std::printf("R(phi) = %d\n", j["reidemeister_number"].get<int>());
        std::printf("fixed irreducible characters = %d\n", j["fixed_characters"].get<int>());
        std::printf("fixed classes = %d\n", j["fixed_classes"].get<int>());
        std::printf("equal: %s\n", j["equal"].get<bool>() ? "yes" : "no");
    }
    return j["equal"].get<bool>() ? 0 : 1;
}

int run_zk(const std::string& mpath, bool json_out) {
    std::string text;
    {
        FILE* f = std::fopen(mpath.c_str(), "rb");
        if (!f) {
            std::fprintf(stderr, "error: cannot open %s\n", mpath.c_str());
            return 2;
        }
        char buf[4096];
        size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
        std::fclose(f);
    }
    StringOut out;
    if (int rc = twc_zk_report(text.c_str(), &out.s)) return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("k = %d\n", j["k"].get<int>());
    if (j["finite"].get<bool>())
        std::printf("classes: %s (finite)\n", j["count"].get<std::string>().c_str());
    else
        std::printf("classes: infinite\n");
    std::printf("invariant factors: %s\n",
                j["invariant_factors"].empty() ? "(none)" : join_ints(j["invariant_factors"]).c_str());
    std::printf("smith diagonal: %s\n", join_ints(j["smith_diagonal"]).c_str());
    std::printf("u: %s\n", j["u"].dump().c_str());
    std::printf("v: %s\n", j["v"].dump().c_str());
    return 0;
}

int load_scenario_arg(const std::string& path, bool bundled, long long window, long long budget,
                      ScenarioHandle& s) {
    if (bundled) return twc_scenario_bundled(path.c_str(), &s.s);
    return twc_scenario_from_file(path.c_str(), window, budget, &s.s);
}

int run_wreath_check(const std::string& path, bool bundled, long long window, long long budget,
                     bool json_out) {
    ScenarioHandle s;
    if (int rc = load_scenario_arg(path, bundled, window, budget, s)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_wreath_check_report(s.s, &out.s)) return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("group %s, k = %d, window = %lld, budget = %lld\n",
                j["group"].get<std::string>().c_str(), j["k"].get<int>(),
                j["window"].get<long long>(), j["budget"].get<long long>());
    std::printf("d: %s (order %d)\n", j["d"].dump().c_str(), j["d_order"].get<int>());
    const json& c = j["certificate"];
    std::printf("certificate: unimodular %s, cocycle consistent %s, a0 injective hom %s, "
                "images commute %s (window %lld)\n",
                c["unimodular"].get<bool>() ? "yes" : "no",
                c["cocycle_consistent"].get<bool>() ? "yes" : "no",
                c["a0_injective_hom"].get<bool>() ? "yes" : "no",
                c["images_commute"].get<bool>() ? "yes" : "no",
                c["images_commute_window"].get<long long>());
    std::printf("base order on window: %lld\n", c["base_order_on_window"].get<long long>());
    std::printf("order condition: %s\n", j["order_condition"].get<std::string>().c_str());
    return 0;
}

int run_witness(const std::string& path, bool bundled, long long window, long long budget,
                const std::string& sigma0, const std::string& m, int count, bool json_out) {
    ScenarioHandle s;
    if (int rc = load_scenario_arg(path, bundled, window, budget, s)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_witness_report(s.s, sigma0.c_str(), m.c_str(), count, &out.s))
        return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("orbit length %d, diameter %lld\n", j["orbit_length"].get<int>(),
                j["diameter"].get<long long>());
    int i = 0;
    for (const auto& w : j["witnesses"]) {
        std::printf("witness %d (multiplier %s): %s\n", i + 1, j["multipliers"][(size_t)i].dump().c_str(),
                    sigma_text(w).c_str());
        ++i;
    }
    return 0;
}

int run_separate(const std::string& path, bool bundled, long long window, long long budget,
                 int count, const std::string& classify, bool json_out) {
    ScenarioHandle s;
    if (int rc = load_scenario_arg(path, bundled, window, budget, s)) return exit_for(rc);
    StringOut out;
    if (int rc = twc_separate_report(s.s, count, &out.s)) return exit_for(rc);
    json j = json::parse(out.str());
    if (json_out)
        std::fputs(out.str().c_str(), stdout);
    else {
        if (j["rbar_finite"].get<bool>())
            std::printf("R(phi-bar) = %s\n", j["rbar_count"].get<std::string>().c_str());
        else
            std::printf("R(phi-bar) = infinite\n");
        for (const auto& cls : j["classes"]) {
            std::string ev = cls["evidence"].get<std::string>();
            if (ev == "one") {
                std::printf("class z=[%s]: evidence one (%zu probes, identity class whole in every closure)\n",
                            join_ints(cls["z"], ",").c_str(), cls["probes"].size());
            } else {
                std::printf("class z=[%s]: evidence infinite (%zu witnesses)\n",
                            join_ints(cls["z"], ",").c_str(), cls["witnesses"].size());
            }
        }
        std::printf("predicate available: %s\n", j["predicate_available"].get<bool>() ? "yes" : "no");
        if (j.contains("probes_truncated") && j["probes_truncated"].get<bool>())
            std::printf("note: probe set truncated at %d seeds\n", j["probe_limit"].get<int>());
    }
    if (!classify.empty()) {
        StringOut cls;
        if (int rc = twc_separate_classify(s.s, classify.c_str(), &cls.s)) return exit_for(rc);
        if (json_out)
            std::fputs(cls.str().c_str(), stdout);
        else {
            json cj = json::parse(cls.str());
            std::printf("class of element: [%s]\n", join_ints(cj["class"], ",").c_str());
        }
    }
    return 0;
}

int run_solvability(const std::string& path, bool bundled, bool json_out) {
    StringOut out;
    if (bundled) {
        ScenarioHandle s;
        if (int rc = twc_scenario_bundled(path.c_str(), &s.s)) return exit_for(rc);
        if (int rc = twc_solvability_scenario_report(s.s, &out.s)) return exit_for(rc);
    } else {
        std::string text;
        FILE* f = std::fopen(path.c_str(), "rb");
        if (!f) {
            std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
            return 2;
        }
        char buf[4096];
        size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
        std::fclose(f);
        json peek;
        try {
            peek = json::parse(text);
        } catch (const json::parse_error& e) {
            std::fprintf(stderr, "error: %s: %s\n", path.c_str(), e.what());
            return 2;
        }
        if (peek.is_object() && peek.contains("d") && peek.contains("a0")) {
            std::string dir;
            auto slash = path.find_last_of('/');
            if (slash != std::string::npos) dir = path.substr(0, slash);
            ScenarioHandle s;
            if (int rc = twc_scenario_from_json(text.c_str(), dir.c_str(), -1, -1, &s.s))
                return exit_for(rc);
            if (int rc = twc_solvability_scenario_report(s.s, &out.s)) return exit_for(rc);
        } else {
            GroupHandle g;
            if (int rc = twc_group_from_json(text.c_str(), &g.g)) return exit_for(rc);
            if (int rc = twc_solvability_group_report(g.g, &out.s)) return exit_for(rc);
        }
    }
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
        return 0;
    }
    json j = json::parse(out.str());
    std::printf("subject: %s\n", j["subject"].get<std::string>().c_str());
    if (j["scenario_based"].get<bool>()) {
        std::printf("closure of origin copy: order %lld, induced map %s, %s (derived length %d)\n",
                    j["closure_order"].get<long long>(),
                    j["induced_fixed_trivial"].get<bool>() ? "fixed-point-free" : "has fixed points",
                    j["closure_solvable"].get<bool>() ? "solvable" : "not solvable",
                    j["closure_derived_length"].get<int>());
    }
    std::printf("base group: %s (derived length %d)\n",
                j["base_solvable"].get<bool>() ? "solvable" : "not solvable",
                j["base_derived_length"].get<int>());
    return 0;
}

int run_verify(bool all, const std::string& check, const std::string& group, unsigned long long seed,
               bool json_out) {
    if (!all && check.empty()) {
        std::fprintf(stderr, "error: verify needs --all or --check <id>\n");
        return 2;
    }
    int failures = 0;
    StringOut out;
    if (int rc = twc_verify(check.empty() ? nullptr : check.c_str(),
                            group.empty() ? nullptr : group.c_str(), seed, &failures, &out.s))
        return exit_for(rc);
    if (json_out) {
        std::fputs(out.str().c_str(), stdout);
    } else {
        json j = json::parse(out.str());
        std::printf("seed %llu\n", (unsigned long long)j["seed"].get<unsigned long long>());
        for (const auto& r : j["reports"])
            std::printf("%-24s %-28s %s\n", r["id"].get<std::string>().c_str(),
                        r["scope"].get<std::string>().c_str(), r["verdict"].get<std::string>().c_str());
        std::printf("failures: %d\n", failures);
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted conjugacy toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable JSON output");

    std::string gpath, apath, mpath, spath, sigma0, mvec, classify, check, group_filter;
    bool bundled = false, all_checks = false;
    long long window = -1, budget = -1;
    int count = 10;
    unsigned long long seed = 0;

    auto* c_classes = app.add_subcommand("classes", "twisted conjugacy classes of an automorphism");
    c_classes->add_option("group", gpath, "group JSON file")->required();
    c_classes->add_option("aut", apath, "automorphism JSON file")->required();

    auto* c_reid = app.add_subcommand("reidemeister", "class count and representatives");
    c_reid->add_option("group", gpath, "group JSON file")->required();
    c_reid->add_option("aut", apath, "automorphism JSON file")->required();

    auto* c_fixed = app.add_subcommand("fixed", "fixed subgroup of an automorphism");
    c_fixed->add_option("group", gpath, "group JSON file")->required();
    c_fixed->add_option("aut", apath, "automorphism JSON file")->required();

    auto* c_char = app.add_subcommand("char-table", "exact character table");
    c_char->add_option("group", gpath, "group JSON file")->required();

    auto* c_tbft = app.add_subcommand("tbft-check", "class count vs fixed irreducible characters");
    c_tbft->add_option("group", gpath, "group JSON file")->required();
    c_tbft->add_option("aut", apath, "automorphism JSON file")->required();

    auto* c_zk = app.add_subcommand("zk-reidemeister", "class count of a lattice automorphism");
    c_zk->add_option("matrix", mpath, "matrix JSON file")->required();

    auto* c_wc = app.add_subcommand("wreath-check", "validate a wreath-product scenario");
    c_wc->add_option("scenario", spath, "scenario JSON file (or bundled name with --bundled)")->required();
    c_wc->add_flag("--bundled", bundled, "treat the argument as a bundled scenario name");
    c_wc->add_option("--window", window, "override the scenario window");
    c_wc->add_option("--budget", budget, "override the scenario budget");

    auto* c_wit = app.add_subcommand("witness", "generate fixed elements with disjoint supports");
    c_wit->add_option("scenario", spath, "scenario JSON file (or bundled name with --bundled)")->required();
    c_wit->add_flag("--bundled", bundled, "treat the argument as a bundled scenario name");
    c_wit->add_option("--sigma0", sigma0, "seed sigma in wire form")->required();
    c_wit->add_option("--m", mvec, "orbit vector, e.g. \"1\" or \"1,0\"")->required();
    c_wit->add_option("--count", count, "number of witnesses (default 10)");
    c_wit->add_option("--window", window, "override the scenario window");
    c_wit->add_option("--budget", budget, "override the scenario budget");

    auto* c_sep = app.add_subcommand("separate", "separation evidence across base classes");
    c_sep->add_option("scenario", spath, "scenario JSON file (or bundled name with --bundled)")->required();
    c_sep->add_flag("--bundled", bundled, "treat the argument as a bundled scenario name");
    c_sep->add_option("--count", count, "witnesses per infinite class (default 10)");
    c_sep->add_option("--window", window, "override the scenario window");
    c_sep->add_option("--budget", budget, "override the scenario budget");
    c_sep->add_option("--classify", classify, "element {\"sigma\":[...],\"z\":[...]} to label");

    auto* c_sol = app.add_subcommand("solvability", "derived series of a group or scenario closure");
    c_sol->add_option("input", spath, "group or scenario JSON file (or bundled scenario with --bundled)")
        ->required();
    c_sol->add_flag("--bundled", bundled, "treat the argument as a bundled scenario name");

    auto* c_ver = app.add_subcommand("verify", "run the bundled verification suite");
    c_ver->add_flag("--all", all_checks, "run every check");
    c_ver->add_option("--check", check, "run one check by id");
    c_ver->add_option("--group", group_filter, "restrict group-scoped checks to one bundled group");
    c_ver->add_option("--seed", seed, "randomization seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    }

    if (c_classes->parsed()) return run_classes(gpath, apath, json_out, false);
    if (c_reid->parsed()) return run_classes(gpath, apath, json_out, true);
    if (c_fixed->parsed()) return run_fixed(gpath, apath, json_out);
    if (c_char->parsed()) return run_char_table(gpath, json_out);
    if (c_tbft->parsed()) return run_tbft(gpath, apath, json_out);
    if (c_zk->parsed()) return run_zk(mpath, json_out);
    if (c_wc->parsed()) return run_wreath_check(spath, bundled, window, budget, json_out);
    if (c_wit->parsed()) return run_witness(spath, bundled, window, budget, sigma0, mvec, count, json_out);
    if (c_sep->parsed()) return run_separate(spath, bundled, window, budget, count, classify, json_out);
    if (c_sol->parsed()) return run_solvability(spath, bundled, json_out);
    if (c_ver->parsed()) return run_verify(all_checks, check, group_filter, seed, json_out);
    std::fprintf(stderr, "error: no subcommand\n");
    return 2;
}
