#pragma once

#include <string>
#include <vector>

#include "wreath.hpp"

namespace twc {

struct BundledScenario {
    std::string name;
    std::string summary;
    WreathAutomorphism phi;
};

/// Wreath-product scenarios shipped with the library (mirrored as JSON files
/// under data/scenarios).
const std::vector<BundledScenario>& bundled_scenarios();
const BundledScenario& bundled_scenario(const std::string& name);

/// a0 sending g to the delta at the origin with value map[g] (map = identity
/// permutation gives the standard embedding).
std::vector<SigmaElement> pointwise_a0(const GroupPtr& g, int k, const std::vector<int>& map);
std::vector<SigmaElement> standard_a0(const GroupPtr& g, int k);

} // namespace twc
