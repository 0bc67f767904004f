#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace twc {

// Reference groups bundled with the library: every group of order <= 24 up to
// isomorphism, plus A5.

GroupPtr cyclic_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr dihedral_group(int n);  // order 2n
GroupPtr dicyclic_group(int n);  // order 4n, unique involution a^n
GroupPtr semidirect_cyclic(int n, int m, int t, const std::string& name); // Cn : Cm, b a b^-1 = a^t
// H acting on N: action[h] is the permutation of N's elements by h
GroupPtr semidirect_general(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<int>>& action, const std::string& name);
GroupPtr renamed(const GroupPtr& g, const std::string& name);

// permutation parsing: "(1 2 3)(4 5)" over `points` points, 1-based
std::vector<int> parse_permutation(const std::string& text, int points);
GroupPtr permutation_group(const std::vector<std::string>& generators, int points,
                           const std::string& name);

struct NamedGroup {
    std::string name;
    GroupPtr group;
};

const std::vector<NamedGroup>& corpus();
GroupPtr corpus_group(const std::string& name);

// isomorphism invariants cheap enough to compare first; full backtracking
// search on generator images decides ties
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

} // namespace twc
