#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "intmat.hpp"

namespace twc {

// Elements of the restricted wreath product G wr Z^k = (direct sum of G over
// Z^k) semidirect Z^k, with Z^k shifting coordinates.

using Point = std::vector<long long>;

Point point_add(const Point& a, const Point& b);
Point point_neg(const Point& a);

// Finitely supported map Z^k -> G, stored sparse: sorted by point, identity
// values never stored.
struct SigmaElement {
    std::vector<std::pair<Point, int>> entries;

    bool empty() const { return entries.empty(); }
    int value_at(const Point& p, int identity) const;
    bool operator==(const SigmaElement& o) const { return entries == o.entries; }
    bool operator!=(const SigmaElement& o) const { return !(*this == o); }
    bool operator<(const SigmaElement& o) const { return entries < o.entries; }
    std::vector<Point> support() const;
};

SigmaElement sigma_canonical(const FiniteGroup& g, std::vector<std::pair<Point, int>> entries);
SigmaElement sigma_mul(const FiniteGroup& g, const SigmaElement& a, const SigmaElement& b);
SigmaElement sigma_inv(const FiniteGroup& g, const SigmaElement& a);
SigmaElement sigma_conj(const FiniteGroup& g, const SigmaElement& u, const SigmaElement& x); // u x u^-1
SigmaElement sigma_shift(const SigmaElement& a, const Point& z);
SigmaElement sigma_delta(const FiniteGroup& g, const Point& p, int value);

// max over pairs of support points of the l-infinity distance; 0 for <= 1 point
long long sigma_diameter(const SigmaElement& a);
bool sigma_in_window(const SigmaElement& a, long long w);
void require_window(const SigmaElement& a, long long w, const char* where);

struct WreathElement {
    SigmaElement sigma;
    Point z;

    bool operator==(const WreathElement& o) const { return sigma == o.sigma && z == o.z; }
    bool operator!=(const WreathElement& o) const { return !(*this == o); }
    bool operator<(const WreathElement& o) const {
        if (z != o.z) return z < o.z;
        return sigma < o.sigma;
    }
};

WreathElement wreath_identity(int k);
WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& x, const WreathElement& y);
WreathElement wreath_inverse(const FiniteGroup& g, const WreathElement& x);

// Which validation checks an automorphism passed, and the windowed order
// evidence. order_matches_base reports whether the observed order of the base
// restriction on window generators equals the order of d (checked on the
// window only, never proved).
struct WreathCertificate {
    bool unimodular = false;
    int d_order = 0;
    bool cocycle_consistent = false;
    bool a0_injective_hom = false;
    bool images_commute = false;
    long long check_window = 0;
    long long base_order_on_window = 0; // 0 = no power up to the cap restored the generators
    bool order_matches_base = false;
};

// Automorphism of G wr Z^k given by the triple (a0, b, d): d acts on Z^k,
// b supplies the cocycle values on the standard basis, a0 gives the image in
// the direct sum of each G-value placed at the origin.
struct WreathAutomorphism {
    GroupPtr group;
    int k = 0;
    IntMatrix d;
    IntMatrix d_inv;
    std::vector<std::vector<long long>> d_rows;
    std::vector<SigmaElement> b_gens;
    std::vector<SigmaElement> a0;
    long long window = 32;
    long long budget = 200000;
    WreathCertificate cert;

    Point apply_d(const Point& p) const;
};

WreathAutomorphism make_wreath_automorphism(GroupPtr group, int k, const IntMatrix& d,
                                            std::vector<SigmaElement> b_gens,
                                            std::vector<SigmaElement> a0, long long window = 32,
                                            long long budget = 200000, long long check_window = -1);

// cocycle expansion b(z) from the generator values
SigmaElement expand_b(const WreathAutomorphism& phi, const Point& z);

// restriction of the automorphism to the direct sum
SigmaElement apply_sigma_automorphism(const WreathAutomorphism& phi, const SigmaElement& s);

WreathElement apply_automorphism(const WreathAutomorphism& phi, const WreathElement& x);

// q-fold iteration vs the closed form through the accumulated cocycle
// beta(q) = phi'^{q-1}(b(m)) phi'^{q-2}(b(dm)) ... b(d^{q-1} m).
struct IterationReport {
    Point m;
    int h = 0;
    int q = 1;
    SigmaElement iterated;
    SigmaElement closed_form;
    SigmaElement beta;
    bool equal = false;
    bool supports_equal = false;
};

IterationReport iterate_formula_check(const WreathAutomorphism& phi, const Point& m, int h, int q);

// Finite subgroup of the direct sum generated by the orbit of the seeds under
// a self-map (default: the automorphism restriction), as an explicit group.
struct ClosureResult {
    GroupPtr group;
    std::vector<SigmaElement> elements; // index = element of `group`
    Automorphism induced;
};

ClosureResult sigma_closure(const WreathAutomorphism& phi, const SigmaElement& seed);
ClosureResult sigma_closure_seeds(const WreathAutomorphism& phi,
                                  const std::vector<SigmaElement>& seeds);
// closure of the whole copy of G at the origin
ClosureResult sigma_closure_g0(const WreathAutomorphism& phi);

struct WitnessBatch {
    std::vector<SigmaElement> witnesses;
    std::vector<long long> multipliers;
    long long diameter = 0;
    int orbit_length = 0;
};

// Pairwise-distinct fixed elements with pairwise-disjoint supports, built by
// pushing shifted copies of a fixed seed far enough apart along the d-orbit
// of m. z_offset twists the map to sigma -> shift(z) . phi'(sigma).
WitnessBatch fixed_witness_generator(const WreathAutomorphism& phi, const SigmaElement& sigma0,
                                     const Point& m, int count);
WitnessBatch fixed_witness_generator_twisted(const WreathAutomorphism& phi,
                                             const SigmaElement& sigma0, const Point& m, int count,
                                             const Point& z_offset);

struct ProbeEvidence {
    SigmaElement seed;
    long long closure_size = 0;
    bool identity_class_is_whole = false;
    SigmaElement fixed_element; // nontrivial fixed element when one exists
};

struct ZClassEvidence {
    Point z;
    bool infinite = false;
    std::vector<ProbeEvidence> probes;
    WitnessBatch witnesses; // populated when infinite
};

struct SeparationReport {
    bool rbar_finite = false;
    BigInt rbar_count = 0;
    FiniteAbelianQuotient quotient; // valid when rbar_finite
    std::vector<ZClassEvidence> per_class;
    bool all_one = false;
    int probe_limit = 0;
    bool probes_truncated = false;

    // the separating map through the coordinate quotient, defined when all_one
    std::vector<BigInt> predicate_class(const WreathElement& x) const;
    bool same_class(const WreathElement& x, const WreathElement& y) const;
};

SeparationReport separation_pipeline(const WreathAutomorphism& phi, int witness_count = 10,
                                     int probe_limit = 512);

// deterministic probe seeds: delta generators over a small box and their
// pairwise products
std::vector<SigmaElement> default_probe_seeds(const WreathAutomorphism& phi, long long box,
                                              int limit, bool* truncated);

} // namespace twc
