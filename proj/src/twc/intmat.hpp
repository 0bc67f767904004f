#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense k x k integer matrix with exact arithmetic.
struct IntMatrix {
    int k = 0;
    std::vector<BigInt> a; // row major

    static IntMatrix identity(int k);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    BigInt& at(int i, int j) { return a[(size_t)i * k + j]; }
    const BigInt& at(int i, int j) const { return a[(size_t)i * k + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
    IntMatrix transpose() const;
    BigInt determinant() const; // fraction-free elimination
    std::vector<std::vector<long long>> to_rows() const; // throws on overflow
};

/// Inverse of a unimodular matrix (integer entries). Throws NotUnimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Least q >= 1 with m^q = I, or nullopt if none up to max_order.
/// Throws NotUnimodular when |det m| != 1.
std::optional<int> matrix_order(const IntMatrix& m, int max_order = 24);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_k,
/// every d_i >= 0. The factorization is re-verified exactly before return.
struct SmithDecomposition {
    IntMatrix u, v, d;
    std::vector<BigInt> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Finite quotient Z^k / im(M) for det(M) != 0, presented as a direct sum of
/// cyclic factors. projection(x) = (U x mod d_i) over the factors with d_i > 1.
struct FiniteAbelianQuotient {
    int k = 0;
    BigInt order = 1;
    std::vector<BigInt> factors;    // invariant factors > 1
    std::vector<int> factor_rows;   // row of U giving each retained factor
    IntMatrix u;                    // from the SNF of M

    std::vector<BigInt> project(const std::vector<BigInt>& x) const;
    std::vector<BigInt> project_ll(const std::vector<long long>& x) const;
    /// Some integer preimage of a residue tuple under project().
    std::vector<BigInt> lift(const std::vector<BigInt>& residues) const;
};

/// Twisted class data for an automorphism of Z^k given by a unimodular d:
/// classes of x ~ x + (I - d) m are counted by |det(I - d)| when nonzero.
struct ZkClassData {
    bool finite = false;
    BigInt count = 0; // valid when finite
    std::optional<FiniteAbelianQuotient> quotient;
    bool fixed_sublattice_trivial = false; // ker(I - d) = 0
};

ZkClassData reidemeister_zk(const IntMatrix& d, int max_order = 24);

/// Solve M w = b over the integers via SNF; nullopt when unsolvable.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& m, const std::vector<BigInt>& b);

/// Number of characters chi of A = Z^k/im(I-d) with chi . delta = chi, where
/// delta is the map induced on A by d. Computed by direct enumeration of the
/// character group; equals |A| because delta acts as the identity on A, but
/// the count is established by enumeration, not by that identity.
BigInt dual_fixed_count_abelian(const FiniteAbelianQuotient& q, const IntMatrix& d);

} // namespace twc
