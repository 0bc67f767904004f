#pragma once

#include <string>

#include "group.hpp"
#include "intmat.hpp"
#include "wreath.hpp"

namespace twc::io {

/// Group JSON: {"name": str, "order": n, "table": [[...]]} or
/// {"name": str, "generators": ["(1 2 3)(4 5)", ...]} with 1-based points
/// (point count inferred from the largest point mentioned).
GroupPtr parse_group(const std::string& text);
GroupPtr load_group(const std::string& path);
std::string group_to_json(const FiniteGroup& g);

/// Automorphism JSON: {"image": [...]}.
Automorphism parse_automorphism(const std::string& text, const GroupPtr& g);
Automorphism load_automorphism(const std::string& path, const GroupPtr& g);
std::string automorphism_to_json(const Automorphism& a);

/// Matrix JSON: {"k": n, "entries": [[...]]} (bare [[...]] also accepted).
IntMatrix parse_matrix(const std::string& text);
IntMatrix load_matrix(const std::string& path);
std::string matrix_to_json(const IntMatrix& m);

/// Sigma wire form: [{"point": [ints], "g": element-index}, ...].
SigmaElement parse_sigma(const std::string& text, const GroupPtr& g, int k);
std::string sigma_to_json(const SigmaElement& s);

/// Lattice vector from "1,0,-2" (or JSON array text).
Point parse_point(const std::string& text, int k);

/// Scenario JSON: {"group": path-or-inline, "k": int, "d": matrix,
/// "b": [sigma...], "a0": {"<g>": sigma, ...}, "window": int, "budget": int}.
/// Relative group paths resolve against base_dir.
WreathAutomorphism parse_scenario(const std::string& text, const std::string& base_dir,
                                  long long window_override = -1, long long budget_override = -1);
WreathAutomorphism load_scenario(const std::string& path, long long window_override = -1,
                                 long long budget_override = -1);
std::string scenario_to_json(const WreathAutomorphism& phi);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace twc::io
