#pragma once

#include "group.hpp"

namespace twc {

/// Partition of G into twisted conjugacy classes x ~ g x phi(g)^-1.
/// Classes are numbered by discovery order scanning elements upward, so each
/// representative is the minimal element index of its class.
struct ReidemeisterPartition {
    GroupPtr group;
    std::vector<int> class_of;        // element -> class id
    std::vector<int> representatives; // class id -> minimal element
    int count = 0;

    std::vector<std::vector<int>> classes() const;
};

ReidemeisterPartition twisted_classes(const Automorphism& phi);

/// F(phi) = {x : phi(x) = x} as a subgroup.
Subgroup fixed_subgroup(const Automorphism& phi);

/// Stabilizer {g : g x phi(g)^-1 = x} of x under the twisted action.
Subgroup twisted_stabilizer(const Automorphism& phi, int x);

/// The shifted automorphism psi = tau_{x^-1} . phi (g -> x^-1 phi(g) x)
/// together with the class bijection {g}_phi -> {g x}_psi.
struct ShiftClassMap {
    Automorphism shifted;              // psi
    ReidemeisterPartition phi_classes;
    ReidemeisterPartition psi_classes;
    std::vector<int> class_bijection;  // phi class id -> psi class id
};

ShiftClassMap shift_class_map(const Automorphism& phi, int x);

/// Report on a finite extension H <| Gamma with phi(H) = H: behavior of
/// classes under the projection, and when the induced map on Gamma/H is
/// fixed-point free, the class count decomposition
///   R(phi) = sum_j R(tau_{g_j} . phi|_H)  over class representatives g_j.
struct ExtensionReport {
    int r_phi = 0;       // R(phi) on Gamma
    int r_quotient = 0;  // R(induced map) on Gamma/H
    int r_restriction = 0; // R(phi|_H)
    int quotient_fixed_order = 0; // |Fix(induced)|
    bool quotient_fixed_trivial = false;
    bool projection_maps_classes_onto_classes = false;
    // Only evaluated when quotient_fixed_trivial:
    bool restriction_classes_are_intersections = false;
    std::vector<int> lifted_reps;       // g_j, one per quotient class
    std::vector<int> summands;          // R(tau_{g_j} . phi|_H)
    bool sum_formula_holds = false;
    // Only evaluated when !quotient_fixed_trivial:
    bool count_bound_holds = false;     // R(phi|_H) <= R(phi) * |Fix(induced)|
};

ExtensionReport extension_sum_check(const Automorphism& phi, const Subgroup& h);

} // namespace twc
