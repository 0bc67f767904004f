#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "intmat.hpp"
#include "wreath.hpp"

namespace twc {

struct CheckReport {
    std::string id;
    std::string scope;
    std::string verdict; // "pass" | "fail" | "skip"
    std::string detail;  // replayable JSON payload
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::vector<CheckReport> reports;
    int failures = 0;
    bool all_passed() const { return failures == 0; }
};

/// Check ids accepted by run_suite, in execution order.
const std::vector<std::string>& suite_check_ids();

/// Runs the selected checks (all when selection is empty) over the bundled
/// corpus and scenarios. group_filter restricts group-scoped checks to one
/// group by name; corpus-wide checks are skipped under a filter. Deterministic
/// for a fixed (selection, filter, seed).
SuiteResult run_suite(const std::vector<std::string>& selection = {},
                      const std::string& group_filter = {}, std::uint64_t seed = 0);

/// Random unimodular integer matrix of finite order: a signed block
/// permutation conjugated by unimodular shears.
IntMatrix random_finite_order_unimodular(std::mt19937_64& rng, int k);

/// Full consistency bundle for one lattice automorphism d: Smith round-trip,
/// class count against det(I-d), windowed pairwise solvability, dual count.
CheckReport zk_roundtrip_check(const IntMatrix& d, std::uint64_t pair_seed);

struct SolvabilityReport {
    std::string subject;
    bool scenario_based = false;
    // scenario route: closure of the origin copy of G and its induced map
    long long closure_order = 0;
    bool induced_fixed_trivial = false;
    int closure_derived_length = 0;
    bool closure_solvable = false;
    // base group route
    int base_derived_length = 0;
    bool base_solvable = false;
};

SolvabilityReport solvability_check(const WreathAutomorphism& phi);
SolvabilityReport solvability_check_group(const GroupPtr& g);

} // namespace twc
