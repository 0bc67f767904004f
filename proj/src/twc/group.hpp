#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace twc {

/// Finite group given by a full Cayley table over elements 0..n-1.
/// Element 0 need not be the identity; the identity is located during build.
struct FiniteGroup {
    std::string name;
    int n = 0;
    std::vector<int> table; // n*n, table[i*n+j] = i*j
    int identity = 0;
    std::vector<int> inverse;

    int mul(int a, int b) const { return table[a * n + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inverse[g]); } // g x g^-1
    int commutator(int a, int b) const { return mul(mul(a, b), mul(inverse[a], inverse[b])); }
    int pow(int a, long long e) const;
    int element_order(int a) const;
    long long exponent() const; // lcm of element orders
    bool is_abelian() const;
    std::vector<int> center() const;
    std::vector<int> order_histogram() const; // histogram[k] = #elements of order k, size n+1
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct BuildOptions {
    std::string name;
    // Associativity is checked exhaustively for n <= exhaustive_limit, otherwise
    // on sampled_triples_factor*n^2 random triples unless force_exhaustive is set.
    bool force_exhaustive = false;
    int exhaustive_limit = 64;
    int sampled_triples_factor = 10;
    std::uint64_t seed = 0;
};

/// Validates the table (Latin square, identity, inverses, associativity) and
/// returns the group. Throws NotAGroupError naming the first failure.
GroupPtr build_group(const std::vector<std::vector<int>>& table, const BuildOptions& opts = {});
GroupPtr build_group_flat(int n, std::vector<int> flat, const BuildOptions& opts = {});

/// Map between groups given element-wise; validated as a homomorphism.
struct GroupMap {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image; // image[i] in target

    int operator()(int i) const { return image[i]; }
};

GroupMap make_homomorphism(GroupPtr source, GroupPtr target, std::vector<int> image);

/// Bijective endomorphism with its order precomputed.
struct Automorphism {
    GroupPtr group;
    std::vector<int> image;
    int order = 1;

    int operator()(int i) const { return image[i]; }
};

Automorphism make_automorphism(GroupPtr group, std::vector<int> image);
Automorphism identity_automorphism(GroupPtr group);
Automorphism inner_automorphism(GroupPtr group, int g); // x -> g x g^-1
Automorphism compose(const Automorphism& f, const Automorphism& g); // x -> f(g(x))

/// Subgroup of `parent` given by its sorted member list, with the induced
/// group structure and the index maps between the two.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;        // sorted parent indices
    GroupPtr as_group;               // induced Cayley table on members
    std::vector<int> parent_to_sub;  // parent index -> sub index, -1 outside

    int size() const { return (int)members.size(); }
    bool contains(int parent_index) const { return parent_to_sub[parent_index] >= 0; }
    bool is_trivial() const { return members.size() == 1; }
};

Subgroup make_subgroup(GroupPtr parent, std::vector<int> members);
Subgroup generated_subgroup(GroupPtr parent, const std::vector<int>& generators);
Subgroup whole_subgroup(GroupPtr parent);
bool is_normal(const Subgroup& h);

struct DerivedSeries {
    std::vector<Subgroup> chain; // chain[0] = G, strictly descending, last is stable
    bool solvable = false;
    std::optional<int> derived_length; // set iff solvable
};

DerivedSeries derived_series(GroupPtr g);

/// Quotient of `g` by a normal subgroup. Cosets are labeled by their minimal
/// element and sorted by it; `projection` maps elements to coset indices.
struct Quotient {
    GroupPtr group;                 // the quotient group
    std::vector<int> projection;    // parent index -> coset index
    std::vector<int> coset_rep;     // coset index -> minimal parent element
};

Quotient quotient_group(GroupPtr g, const Subgroup& h);

/// Extends images of generators to the whole group, or nullopt when the
/// assignment is inconsistent / does not stay injective as required.
/// `require_bijective` also rejects non-surjective completions.
std::optional<std::vector<int>> extend_generator_images(
    const FiniteGroup& src, const FiniteGroup& dst,
    const std::vector<int>& gens, const std::vector<int>& gen_images,
    bool require_bijective);

/// Small generating set found greedily (largest order first).
std::vector<int> small_generating_set(const FiniteGroup& g);

} // namespace twc
