#pragma once

#include "cyclotomic.hpp"
#include "group.hpp"

namespace twc {

/// Conjugacy classes with the combinatorial data character computations need.
/// Classes are numbered by minimal element; class 0 is the identity class.
struct ConjugacyClassData {
    GroupPtr group;
    int count = 0;
    std::vector<int> class_of;
    std::vector<int> representatives; // minimal element per class
    std::vector<int> sizes;
    std::vector<int> element_orders;  // order of any member, per class
    std::vector<int> inverse_class;   // class of rep^-1
    // mult[i][j][k] = #{(x,y) in C_i x C_j : x y = z_k} for a fixed z_k in C_k.
    std::vector<std::vector<std::vector<long long>>> mult;
    // power_class[j][v] = class of rep_j^v, v in [0, element_orders[j])
    std::vector<std::vector<int>> power_class;
};

ConjugacyClassData conjugacy_data(GroupPtr g);

/// Exact character table. Values live in Z[zeta_e], e = exponent(G), computed
/// with the modular eigenvector method (prime p = 1 mod e, p > 2 sqrt|G|) and
/// lifted to exact root-of-unity multiplicities. Rows are sorted by
/// (degree, lexicographic reduced values) and both orthogonality relations
/// are verified exactly before the table is returned.
struct CharacterTable {
    GroupPtr group;
    ConjugacyClassData classes;
    long long exponent = 1;
    long long prime = 0; // modulus used internally
    std::vector<long long> degrees;
    std::vector<std::vector<CycInt>> values; // values[row][class]
};

CharacterTable character_table(GroupPtr g);

/// Dual action of an automorphism on classes and irreducible characters.
struct DualAction {
    std::vector<int> class_permutation;     // j -> class(phi(rep_j))
    std::vector<int> character_permutation; // t -> row index of chi_t . phi
    int fixed_classes = 0;
    int fixed_characters = 0;
};

DualAction dual_action(const CharacterTable& table, const Automorphism& phi);

/// Number of irreducible characters with chi . phi = chi.
int fixed_irreducibles(const CharacterTable& table, const Automorphism& phi);

struct TbftReport {
    int reidemeister_number = 0;
    int fixed_character_count = 0;
    bool equal = false;
};

/// Compares R(phi) with the number of phi-fixed irreducible characters.
TbftReport tbft_check(const CharacterTable& table, const Automorphism& phi);

} // namespace twc
