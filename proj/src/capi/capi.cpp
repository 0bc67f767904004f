#include "twisted/twisted.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "../twc/autenum.hpp"
#include "../twc/chartable.hpp"
#include "../twc/corpus.hpp"
#include "../twc/errors.hpp"
#include "../twc/io.hpp"
#include "../twc/scenarios.hpp"
#include "../twc/suite.hpp"
#include "../twc/twisted.hpp"
#include "../twc/wreath.hpp"

using nlohmann::json;

struct twc_group {
    twc::GroupPtr g;
};

struct twc_aut {
    twc::Automorphism a;
};

struct twc_scenario {
    twc::WreathAutomorphism phi;
    std::optional<twc::SeparationReport> separation;
    int separation_witness_count = 0;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return TWC_OK;
    } catch (const twc::ParseError& e) {
        return set_error(TWC_ERROR_PARSE, e.what());
    } catch (const twc::WindowExceededError& e) {
        return set_error(TWC_ERROR_LIMIT, e.what());
    } catch (const twc::BudgetExceededError& e) {
        return set_error(TWC_ERROR_LIMIT, e.what());
    } catch (const twc::ComputationFailedError& e) {
        return set_error(TWC_ERROR_INTERNAL, e.what());
    } catch (const twc::Error& e) {
        return set_error(TWC_ERROR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return set_error(TWC_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool cond, const char* what) {
    if (cond) return TWC_OK;
    return set_error(TWC_ERROR_PARSE, std::string("null ") + what);
}

json sigma_wire(const twc::SigmaElement& s) {
    json out = json::array();
    for (const auto& [p, v] : s.entries) out.push_back(json{{"g", v}, {"point", p}});
    return out;
}

json element_wire(const twc::WreathElement& x) {
    return json{{"sigma", sigma_wire(x.sigma)}, {"z", x.z}};
}

json partition_json(const twc::ReidemeisterPartition& p) {
    json classes = json::array();
    for (const auto& cls : p.classes()) classes.push_back(cls);
    return json{{"count", p.count},
                {"representatives", p.representatives},
                {"class_of", p.class_of},
                {"classes", classes}};
}

json solvability_json(const twc::SolvabilityReport& r) {
    json j{{"subject", r.subject},
           {"scenario_based", r.scenario_based},
           {"base_derived_length", r.base_derived_length},
           {"base_solvable", r.base_solvable}};
    if (r.scenario_based) {
        j["closure_order"] = r.closure_order;
        j["induced_fixed_trivial"] = r.induced_fixed_trivial;
        j["closure_derived_length"] = r.closure_derived_length;
        j["closure_solvable"] = r.closure_solvable;
    }
    return j;
}

const twc::SeparationReport& cached_separation(twc_scenario* s, int witness_count) {
    if (witness_count <= 0) witness_count = 10;
    if (!s->separation || s->separation_witness_count != witness_count) {
        s->separation = twc::separation_pipeline(s->phi, witness_count);
        s->separation_witness_count = witness_count;
    }
    return *s->separation;
}

json separation_json(const twc::SeparationReport& r) {
    json classes = json::array();
    for (const auto& ev : r.per_class) {
        json probes = json::array();
        for (const auto& p : ev.probes)
            probes.push_back(json{{"seed", sigma_wire(p.seed)},
                                  {"closure_size", p.closure_size},
                                  {"identity_class_is_whole", p.identity_class_is_whole},
                                  {"fixed_element", sigma_wire(p.fixed_element)}});
        json cls{{"z", ev.z}, {"evidence", ev.infinite ? "infinite" : "one"}, {"probes", probes}};
        if (ev.infinite) {
            json ws = json::array();
            for (const auto& w : ev.witnesses.witnesses) ws.push_back(sigma_wire(w));
            cls["witnesses"] = ws;
            cls["multipliers"] = ev.witnesses.multipliers;
        }
        classes.push_back(std::move(cls));
    }
    json j{{"rbar_finite", r.rbar_finite},
           {"classes", classes},
           {"all_one", r.all_one},
           {"probe_limit", r.probe_limit},
           {"probes_truncated", r.probes_truncated},
           {"predicate_available", r.rbar_finite && r.all_one}};
    if (r.rbar_finite) {
        j["rbar_count"] = r.rbar_count.str();
        json factors = json::array();
        for (const auto& f : r.quotient.factors) factors.push_back(f.str());
        j["quotient_factors"] = factors;
    }
    return j;
}

} // namespace

extern "C" {

const char* twc_version(void) { return "0.1.0"; }

const char* twc_last_error(void) { return g_last_error.c_str(); }

void twc_string_free(char* s) { std::free(s); }

int twc_group_from_json(const char* text, twc_group** out) {
    if (int r = require(text && out, "argument")) return r;
    return guarded([&] { *out = new twc_group{twc::io::parse_group(text)}; });
}

int twc_group_from_file(const char* path, twc_group** out) {
    if (int r = require(path && out, "argument")) return r;
    return guarded([&] { *out = new twc_group{twc::io::load_group(path)}; });
}

int twc_group_bundled(const char* name, twc_group** out) {
    if (int r = require(name && out, "argument")) return r;
    return guarded([&] { *out = new twc_group{twc::corpus_group(name)}; });
}

int twc_group_list_bundled(char** out) {
    if (int r = require(out, "argument")) return r;
    return guarded([&] {
        json list = json::array();
        for (const auto& ng : twc::corpus())
            list.push_back(json{{"name", ng.name}, {"order", ng.group->n}});
        *out = dup_string(list.dump(2) + "\n");
    });
}

void twc_group_free(twc_group* g) { delete g; }

int twc_group_order(const twc_group* g) { return g ? g->g->n : 0; }

const char* twc_group_name(const twc_group* g) { return g ? g->g->name.c_str() : ""; }

int twc_group_to_json(const twc_group* g, char** out) {
    if (int r = require(g && out, "argument")) return r;
    return guarded([&] { *out = dup_string(twc::io::group_to_json(*g->g)); });
}

int twc_aut_from_json(const twc_group* g, const char* text, twc_aut** out) {
    if (int r = require(g && text && out, "argument")) return r;
    return guarded([&] { *out = new twc_aut{twc::io::parse_automorphism(text, g->g)}; });
}

int twc_aut_from_file(const twc_group* g, const char* path, twc_aut** out) {
    if (int r = require(g && path && out, "argument")) return r;
    return guarded([&] { *out = new twc_aut{twc::io::load_automorphism(path, g->g)}; });
}

void twc_aut_free(twc_aut* a) { delete a; }

int twc_classes_report(const twc_group* g, const twc_aut* a, char** out) {
    if (int r = require(g && a && out, "argument")) return r;
    return guarded([&] {
        twc::ReidemeisterPartition p = twc::twisted_classes(a->a);
        json j = partition_json(p);
        j["group"] = g->g->name;
        *out = dup_string(j.dump(2) + "\n");
    });
}

int twc_fixed_report(const twc_group* g, const twc_aut* a, char** out) {
    if (int r = require(g && a && out, "argument")) return r;
    return guarded([&] {
        twc::Subgroup f = twc::fixed_subgroup(a->a);
        *out = dup_string(json{{"group", g->g->name},
                               {"order", f.size()},
                               {"members", f.members},
                               {"trivial", f.is_trivial()}}
                              .dump(2) +
                          "\n");
    });
}

int twc_char_table_report(const twc_group* g, char** out) {
    if (int r = require(g && out, "argument")) return r;
    return guarded([&] {
        twc::CharacterTable t = twc::character_table(g->g);
        json rows = json::array();
        for (const auto& row : t.values) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.reduced());
            rows.push_back(std::move(r));
        }
        *out = dup_string(json{{"group", g->g->name},
                               {"exponent", t.exponent},
                               {"degrees", t.degrees},
                               {"class_representatives", t.classes.representatives},
                               {"class_sizes", t.classes.sizes},
                               {"values", rows},
                               {"value_basis", "integer coordinates over 1, zeta, ..., zeta^(phi(e)-1), zeta = exp(2*pi*i/e)"}}
                              .dump(2) +
                          "\n");
    });
}

int twc_tbft_report(const twc_group* g, const twc_aut* a, char** out) {
    if (int r = require(g && a && out, "argument")) return r;
    return guarded([&] {
        twc::CharacterTable t = twc::character_table(g->g);
        twc::TbftReport rep = twc::tbft_check(t, a->a);
        twc::DualAction da = twc::dual_action(t, a->a);
        *out = dup_string(json{{"group", g->g->name},
                               {"reidemeister_number", rep.reidemeister_number},
                               {"fixed_characters", rep.fixed_character_count},
                               {"fixed_classes", da.fixed_classes},
                               {"equal", rep.equal}}
                              .dump(2) +
                          "\n");
    });
}

int twc_solvability_group_report(const twc_group* g, char** out) {
    if (int r = require(g && out, "argument")) return r;
    return guarded([&] {
        *out = dup_string(solvability_json(twc::solvability_check_group(g->g)).dump(2) + "\n");
    });
}

int twc_zk_report(const char* matrix_json, char** out) {
    if (int r = require(matrix_json && out, "argument")) return r;
    return guarded([&] {
        twc::IntMatrix d = twc::io::parse_matrix(matrix_json);
        twc::ZkClassData zk = twc::reidemeister_zk(d);
        twc::IntMatrix m = twc::IntMatrix::identity(d.k) - d;
        twc::SmithDecomposition snf = twc::smith_normal_form(m);
        json factors = json::array();
        for (const auto& f : snf.diagonal())
            if (f != 0 && f != 1) factors.push_back(f.str());
        json j{{"k", d.k},
               {"d", d.to_rows()},
               {"finite", zk.finite},
               {"fixed_sublattice_trivial", zk.fixed_sublattice_trivial},
               {"invariant_factors", factors},
               {"u", snf.u.to_rows()},
               {"v", snf.v.to_rows()},
               {"smith_diagonal", [&] {
                    json diag = json::array();
                    for (const auto& f : snf.diagonal()) diag.push_back(f.str());
                    return diag;
                }()}};
        j["count"] = zk.finite ? json(zk.count.str()) : json("infinite");
        *out = dup_string(j.dump(2) + "\n");
    });
}

int twc_scenario_from_json(const char* text, const char* base_dir, long long window_override,
                           long long budget_override, twc_scenario** out) {
    if (int r = require(text && out, "argument")) return r;
    return guarded([&] {
        *out = new twc_scenario{
            twc::io::parse_scenario(text, base_dir ? base_dir : "", window_override, budget_override),
            std::nullopt, 0};
    });
}

int twc_scenario_from_file(const char* path, long long window_override, long long budget_override,
                           twc_scenario** out) {
    if (int r = require(path && out, "argument")) return r;
    return guarded([&] {
        *out = new twc_scenario{twc::io::load_scenario(path, window_override, budget_override),
                                std::nullopt, 0};
    });
}

int twc_scenario_bundled(const char* name, twc_scenario** out) {
    if (int r = require(name && out, "argument")) return r;
    return guarded([&] {
        *out = new twc_scenario{twc::bundled_scenario(name).phi, std::nullopt, 0};
    });
}

int twc_scenario_list_bundled(char** out) {
    if (int r = require(out, "argument")) return r;
    return guarded([&] {
        json list = json::array();
        for (const auto& s : twc::bundled_scenarios())
            list.push_back(json{{"name", s.name}, {"summary", s.summary}});
        *out = dup_string(list.dump(2) + "\n");
    });
}

void twc_scenario_free(twc_scenario* s) { delete s; }

int twc_wreath_check_report(const twc_scenario* s, char** out) {
    if (int r = require(s && out, "argument")) return r;
    return guarded([&] {
        const twc::WreathCertificate& c = s->phi.cert;
        bool cond4 = c.order_matches_base;
        *out = dup_string(
            json{{"group", s->phi.group->name},
                 {"k", s->phi.k},
                 {"d", s->phi.d.to_rows()},
                 {"window", s->phi.window},
                 {"budget", s->phi.budget},
                 {"d_order", c.d_order},
                 {"certificate",
                  json{{"unimodular", c.unimodular},
                       {"cocycle_consistent", c.cocycle_consistent},
                       {"a0_injective_hom", c.a0_injective_hom},
                       {"images_commute_window", c.check_window},
                       {"images_commute", c.images_commute},
                       {"base_order_on_window", c.base_order_on_window}}},
                 {"order_condition", cond4 ? "holds on window" : "fails on window"}}
                .dump(2) +
            "\n");
    });
}

int twc_witness_report(const twc_scenario* s, const char* sigma0_json, const char* m_text,
                       int count, char** out) {
    if (int r = require(s && sigma0_json && m_text && out, "argument")) return r;
    return guarded([&] {
        twc::SigmaElement sigma0 = twc::io::parse_sigma(sigma0_json, s->phi.group, s->phi.k);
        twc::Point m = twc::io::parse_point(m_text, s->phi.k);
        twc::WitnessBatch batch = twc::fixed_witness_generator(s->phi, sigma0, m, count);
        json ws = json::array();
        for (const auto& w : batch.witnesses) ws.push_back(sigma_wire(w));
        *out = dup_string(json{{"sigma0", sigma_wire(sigma0)},
                               {"m", m},
                               {"count", (int)batch.witnesses.size()},
                               {"orbit_length", batch.orbit_length},
                               {"diameter", batch.diameter},
                               {"multipliers", batch.multipliers},
                               {"witnesses", ws}}
                              .dump(2) +
                          "\n");
    });
}

int twc_separate_report(twc_scenario* s, int witness_count, char** out) {
    if (int r = require(s && out, "argument")) return r;
    return guarded([&] {
        const twc::SeparationReport& rep = cached_separation(s, witness_count);
        *out = dup_string(separation_json(rep).dump(2) + "\n");
    });
}

int twc_separate_classify(twc_scenario* s, const char* element_json, char** out) {
    if (int r = require(s && element_json && out, "argument")) return r;
    return guarded([&] {
        json j;
        try {
            j = json::parse(element_json);
        } catch (const json::parse_error& e) {
            throw twc::ParseError(e.what());
        }
        if (!j.is_object() || !j.contains("sigma") || !j.contains("z"))
            throw twc::ParseError("element must be {\"sigma\": [...], \"z\": [...]}");
        twc::WreathElement x;
        x.sigma = twc::io::parse_sigma(j["sigma"].dump(), s->phi.group, s->phi.k);
        if (!j["z"].is_array() || (int)j["z"].size() != s->phi.k)
            throw twc::ParseError("\"z\" must be an array of k integers");
        for (const auto& v : j["z"]) x.z.push_back(v.get<long long>());
        const twc::SeparationReport& rep = cached_separation(s, 0);
        std::vector<twc::BigInt> cls = rep.predicate_class(x);
        json label = json::array();
        for (const auto& c : cls) label.push_back(c.str());
        *out = dup_string(json{{"element", element_wire(x)}, {"class", label}}.dump(2) + "\n");
    });
}

int twc_solvability_scenario_report(const twc_scenario* s, char** out) {
    if (int r = require(s && out, "argument")) return r;
    return guarded(
        [&] { *out = dup_string(solvability_json(twc::solvability_check(s->phi)).dump(2) + "\n"); });
}

int twc_verify(const char* check_id, const char* group_name, unsigned long long seed,
               int* failures, char** out) {
    if (int r = require(out, "argument")) return r;
    return guarded([&] {
        std::vector<std::string> selection;
        if (check_id && *check_id) selection.push_back(check_id);
        twc::SuiteResult res =
            twc::run_suite(selection, group_name ? std::string(group_name) : std::string(), seed);
        json reports = json::array();
        for (const auto& r : res.reports) {
            json detail;
            try {
                detail = json::parse(r.detail);
            } catch (...) {
                detail = r.detail;
            }
            reports.push_back(
                json{{"id", r.id}, {"scope", r.scope}, {"verdict", r.verdict}, {"detail", detail}});
        }
        if (failures) *failures = res.failures;
        *out = dup_string(
            json{{"seed", res.seed}, {"failures", res.failures}, {"reports", reports}}.dump(2) + "\n");
    });
}

int twc_verify_check_ids(char** out) {
    if (int r = require(out, "argument")) return r;
    return guarded([&] {
        json ids = json::array();
        for (const auto& id : twc::suite_check_ids()) ids.push_back(id);
        *out = dup_string(ids.dump() + "\n");
    });
}

} // extern "C"
