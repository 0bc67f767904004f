#include "io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "errors.hpp"

namespace twc::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

GroupPtr group_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("group must be a JSON object");
    std::string name = j.contains("name") ? field(j, "name").get<std::string>() : "";
    if (j.contains("generators")) {
        std::vector<std::string> gens = field(j, "generators").get<std::vector<std::string>>();
        int points = 0;
        for (const auto& text : gens)
            for (size_t i = 0; i < text.size();) {
                if (isdigit((unsigned char)text[i])) {
                    int v = 0;
                    while (i < text.size() && isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
                    points = std::max(points, v);
                } else {
                    ++i;
                }
            }
        if (points == 0) throw ParseError("generators mention no points");
        return permutation_group(gens, points, name.empty() ? "permutation-group" : name);
    }
    int order = int_field(j, "order");
    const json& table = field(j, "table");
    if (!table.is_array() || (int)table.size() != order)
        throw ParseError("field \"table\" must be an array of " + std::to_string(order) + " rows");
    std::vector<int> flat;
    flat.reserve((size_t)order * order);
    for (const auto& row : table) {
        if (!row.is_array() || (int)row.size() != order)
            throw ParseError("every table row must have " + std::to_string(order) + " entries");
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("table entries must be integers");
            flat.push_back(v.get<int>());
        }
    }
    BuildOptions o;
    o.name = name.empty() ? "group" : name;
    return build_group_flat(order, std::move(flat), o);
}

json group_json(const FiniteGroup& g) {
    json rows = json::array();
    for (int i = 0; i < g.n; ++i) {
        json row = json::array();
        for (int j = 0; j < g.n; ++j) row.push_back(g.mul(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"name", g.name}, {"order", g.n}, {"table", rows}};
}

IntMatrix matrix_from_json(const json& j) {
    json entries;
    if (j.is_array()) {
        entries = j;
    } else if (j.is_object()) {
        entries = field(j, "entries");
        int k = int_field(j, "k");
        if (!entries.is_array() || (int)entries.size() != k)
            throw ParseError("matrix \"entries\" must have k rows");
    } else {
        throw ParseError("matrix must be an array of rows or {\"k\",\"entries\"}");
    }
    std::vector<std::vector<long long>> rows;
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != entries.size())
            throw ParseError("matrix must be square");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("matrix entries must be integers");
            r.push_back(v.get<long long>());
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("matrix must be nonempty");
    return IntMatrix::from_rows(rows);
}

SigmaElement sigma_from_json(const json& j, const FiniteGroup& g, int k) {
    if (!j.is_array()) throw ParseError("sigma element must be an array of {\"point\",\"g\"} entries");
    std::vector<std::pair<Point, int>> entries;
    for (const auto& e : j) {
        const json& pt = field(e, "point");
        if (!pt.is_array() || (int)pt.size() != k)
            throw ParseError("sigma \"point\" must be an array of " + std::to_string(k) + " integers");
        Point p;
        for (const auto& v : pt) p.push_back(v.get<long long>());
        int val = int_field(e, "g");
        if (val < 0 || val >= g.n) throw ParseError("sigma \"g\" index out of range");
        entries.emplace_back(std::move(p), val);
    }
    return sigma_canonical(g, std::move(entries));
}

json sigma_json(const SigmaElement& s) {
    json out = json::array();
    for (const auto& [p, v] : s.entries) out.push_back(json{{"g", v}, {"point", p}});
    return out;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

GroupPtr parse_group(const std::string& text) { return group_from_json(parse_json(text)); }

GroupPtr load_group(const std::string& path) {
    try {
        return parse_group(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string group_to_json(const FiniteGroup& g) { return group_json(g).dump(2) + "\n"; }

Automorphism parse_automorphism(const std::string& text, const GroupPtr& g) {
    json j = parse_json(text);
    std::vector<int> image = field(j, "image").get<std::vector<int>>();
    if ((int)image.size() != g->n)
        throw ParseError("automorphism image must list " + std::to_string(g->n) + " elements");
    return make_automorphism(g, image);
}

Automorphism load_automorphism(const std::string& path, const GroupPtr& g) {
    try {
        return parse_automorphism(read_file(path), g);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string automorphism_to_json(const Automorphism& a) {
    return json{{"image", a.image}}.dump(2) + "\n";
}

IntMatrix parse_matrix(const std::string& text) { return matrix_from_json(parse_json(text)); }

IntMatrix load_matrix(const std::string& path) {
    try {
        return parse_matrix(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string matrix_to_json(const IntMatrix& m) {
    return json{{"entries", m.to_rows()}, {"k", m.k}}.dump(2) + "\n";
}

SigmaElement parse_sigma(const std::string& text, const GroupPtr& g, int k) {
    return sigma_from_json(parse_json(text), *g, k);
}

std::string sigma_to_json(const SigmaElement& s) { return sigma_json(s).dump(); }

Point parse_point(const std::string& text, int k) {
    Point p;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '[' || text[i] == ']'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        bool neg = false;
        if (text[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= text.size() || !isdigit((unsigned char)text[i]))
            throw ParseError("expected integer at position " + std::to_string(i) + " in \"" + text + "\"");
        long long v = 0;
        while (i < text.size() && isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
        p.push_back(neg ? -v : v);
        skip();
    }
    if ((int)p.size() != k)
        throw ParseError("expected " + std::to_string(k) + " coordinates in \"" + text + "\"");
    return p;
}

WreathAutomorphism parse_scenario(const std::string& text, const std::string& base_dir,
                                  long long window_override, long long budget_override) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");
    GroupPtr g;
    const json& gj = field(j, "group");
    if (gj.is_string()) {
        std::string path = gj.get<std::string>();
        if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
        g = load_group(path);
    } else {
        g = group_from_json(gj);
    }
    int k = int_field(j, "k");
    if (k < 1) throw ParseError("field \"k\" must be positive");
    IntMatrix d = matrix_from_json(field(j, "d"));
    if (d.k != k) throw ParseError("matrix \"d\" must be k x k");
    std::vector<SigmaElement> b;
    if (j.contains("b")) {
        const json& bj = field(j, "b");
        if (!bj.is_array() || ((int)bj.size() != 0 && (int)bj.size() != k))
            throw ParseError("field \"b\" must list one sigma per lattice generator");
        for (const auto& e : bj) b.push_back(sigma_from_json(e, *g, k));
    }
    std::vector<SigmaElement> a0((size_t)g->n);
    const json& aj = field(j, "a0");
    if (!aj.is_object()) throw ParseError("field \"a0\" must map element indices to sigma elements");
    for (auto it = aj.begin(); it != aj.end(); ++it) {
        int idx;
        try {
            idx = std::stoi(it.key());
        } catch (...) {
            throw ParseError("a0 key \"" + it.key() + "\" is not an element index");
        }
        if (idx < 0 || idx >= g->n) throw ParseError("a0 key \"" + it.key() + "\" out of range");
        a0[(size_t)idx] = sigma_from_json(it.value(), *g, k);
    }
    long long window = j.contains("window") ? field(j, "window").get<long long>() : 32;
    long long budget = j.contains("budget") ? field(j, "budget").get<long long>() : 200000;
    if (window_override > 0) window = window_override;
    if (budget_override > 0) budget = budget_override;
    return make_wreath_automorphism(g, k, d, std::move(b), std::move(a0), window, budget);
}

WreathAutomorphism load_scenario(const std::string& path, long long window_override,
                                 long long budget_override) {
    std::string dir;
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    try {
        return parse_scenario(read_file(path), dir, window_override, budget_override);
    } catch (const ParseError& e) {
        std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        throw ParseError(path + ": " + what);
    }
}

std::string scenario_to_json(const WreathAutomorphism& phi) {
    json a0 = json::object();
    for (int i = 0; i < phi.group->n; ++i)
        if (!phi.a0[(size_t)i].empty()) a0[std::to_string(i)] = sigma_json(phi.a0[(size_t)i]);
    json b = json::array();
    for (const auto& s : phi.b_gens) b.push_back(sigma_json(s));
    return json{{"a0", a0},
                {"b", b},
                {"budget", phi.budget},
                {"d", phi.d.to_rows()},
                {"group", group_json(*phi.group)},
                {"k", phi.k},
                {"window", phi.window}}
               .dump(2) +
           "\n";
}

} // namespace twc::io
