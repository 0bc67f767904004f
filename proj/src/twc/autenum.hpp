#pragma once

#include <cstdint>

#include "group.hpp"

namespace twc {

struct AutEnumeration {
    std::vector<Automorphism> autos;
    bool complete = true;   // false when the budget stopped the search
    long long nodes = 0;    // backtracking states visited
};

/// All automorphisms of g by backtracking over generator images. When more
/// than `budget` automorphisms exist the search is abandoned and a random
/// sample of distinct automorphisms (seeded rejection sampling, so uniform
/// over Aut) is returned with complete = false.
AutEnumeration enumerate_automorphisms(const GroupPtr& g, long long budget = 100000,
                                       std::uint64_t seed = 0);

} // namespace twc
