#include "chartable.hpp"

#include <algorithm>
#include <cmath>

#include "twisted.hpp"

namespace twc {

ConjugacyClassData conjugacy_data(GroupPtr g) {
    ConjugacyClassData d;
    d.group = g;
    int n = g->n;
    d.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (d.class_of[x] >= 0) continue;
        int id = d.count++;
        d.representatives.push_back(x);
        int size = 0;
        for (int a = 0; a < n; ++a) {
            int y = g->conj(a, x);
            if (d.class_of[y] < 0) {
                d.class_of[y] = id;
                ++size;
            }
        }
        d.sizes.push_back(size);
    }

    d.element_orders.resize(d.count);
    d.inverse_class.resize(d.count);
    d.power_class.resize(d.count);
    for (int j = 0; j < d.count; ++j) {
        int r = d.representatives[j];
        d.element_orders[j] = g->element_order(r);
        d.inverse_class[j] = d.class_of[g->inv(r)];
        d.power_class[j].resize(d.element_orders[j]);
        int x = g->identity;
        for (int v = 0; v < d.element_orders[j]; ++v) {
            d.power_class[j][v] = d.class_of[x];
            x = g->mul(x, r);
        }
    }

    // Structure constants by one sweep over all pairs, then divide the totals
    // by the class size of the product (the count is constant over C_k).
    int r = d.count;
    std::vector<std::vector<std::vector<long long>>> total(
        r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            ++total[d.class_of[x]][d.class_of[y]][d.class_of[g->mul(x, y)]];
    d.mult = std::move(total);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                if (d.mult[i][j][k] % d.sizes[k] != 0)
                    throw ComputationFailedError("structure constant not divisible by class size");
                d.mult[i][j][k] /= d.sizes[k];
            }
    return d;
}

namespace {

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

long long pick_prime(long long e, long long n) {
    long long lower = (long long)(2.0 * std::sqrt((double)n)) + 1;
    for (long long p = e + 1;; p += e)
        if (p > lower && is_prime(p)) return p;
}

long long primitive_root_of_order(long long e, long long p) {
    // find a generator of F_p^*, then raise to (p-1)/e
    auto order_ok = [&](long long g) {
        // g is a generator iff g^((p-1)/q) != 1 for every prime q | p-1
        long long m = p - 1;
        for (long long q = 2; q * q <= m; ++q) {
            if (m % q) continue;
            while (m % q == 0) m /= q;
            if (mod_pow(g, (p - 1) / q, p) == 1) return false;
        }
        if (m > 1 && mod_pow(g, (p - 1) / m, p) == 1) return false;
        return true;
    };
    for (long long g = 2; g < p; ++g)
        if (order_ok(g)) return mod_pow(g, (p - 1) / e, p);
    throw ComputationFailedError("no primitive root found");
}

using FpVec = std::vector<long long>;
using FpMat = std::vector<FpVec>; // row major

// Basis of the kernel of m (rows x cols) mod p.
std::vector<FpVec> kernel_basis(FpMat m, long long p) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        long long inv = mod_inv(m[rank][c], p);
        for (int cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            long long f = m[r][c] % p;
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<FpVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        FpVec v(cols, 0);
        v[c] = 1;
        for (int r = 0; r < (int)pivot_col.size(); ++r)
            v[pivot_col[r]] = (p - m[r][c] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve basis_matrix * x = target where basis vectors are the columns.
FpVec solve_in_basis(const std::vector<FpVec>& basis, const FpVec& target, long long p) {
    int dim = (int)basis.size();
    int len = (int)target.size();
    FpMat aug((size_t)len, FpVec((size_t)dim + 1, 0));
    for (int r = 0; r < len; ++r) {
        for (int c = 0; c < dim; ++c) aug[r][c] = basis[c][r] % p;
        aug[r][dim] = target[r] % p;
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < dim && rank < len; ++c) {
        int pr = -1;
        for (int r = rank; r < len; ++r)
            if (aug[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[rank], aug[pr]);
        long long inv = mod_inv(aug[rank][c], p);
        for (int cc = c; cc <= dim; ++cc) aug[rank][cc] = aug[rank][cc] * inv % p;
        for (int r = 0; r < len; ++r) {
            if (r == rank || aug[r][c] == 0) continue;
            long long f = aug[r][c];
            for (int cc = c; cc <= dim; ++cc)
                aug[r][cc] = ((aug[r][cc] - f * aug[rank][cc]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++rank;
    }
    FpVec x((size_t)dim, 0);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][dim];
    // consistency
    for (int r = 0; r < len; ++r) {
        long long acc = 0;
        for (int c = 0; c < dim; ++c) acc = (acc + basis[c][r] * x[c]) % p;
        if (acc != target[r] % p) throw ComputationFailedError("vector not in subspace");
    }
    return x;
}

} // namespace

CharacterTable character_table(GroupPtr g) {
    CharacterTable t;
    t.group = g;
    t.classes = conjugacy_data(g);
    const auto& cd = t.classes;
    int r = cd.count;
    long long n = g->n;
    t.exponent = g->exponent();
    long long p = pick_prime(t.exponent, n);
    t.prime = p;
    long long z = primitive_root_of_order(t.exponent, p);

    // Class-sum matrices (M_i)_{jk} = a_{ijk}; their simultaneous eigenvectors
    // mod p are the central characters.
    std::vector<FpMat> class_mats((size_t)r);
    for (int i = 0; i < r; ++i) {
        FpMat m((size_t)r, FpVec((size_t)r, 0));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) m[j][k] = cd.mult[i][j][k] % p;
        class_mats[i] = std::move(m);
    }

    // Refine the full space into common one-dimensional eigenspaces.
    std::vector<std::vector<FpVec>> spaces;
    {
        std::vector<FpVec> full;
        for (int i = 0; i < r; ++i) {
            FpVec v((size_t)r, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 0; i < r; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;
        std::vector<std::vector<FpVec>> next;
        for (auto& s : spaces) {
            int dim = (int)s.size();
            if (dim == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // restriction N of M_i to span(s): M_i * s_b = sum_a N[a][b] s_a
            FpMat rest((size_t)dim, FpVec((size_t)dim, 0));
            for (int b = 0; b < dim; ++b) {
                FpVec img((size_t)r, 0);
                for (int row = 0; row < r; ++row) {
                    long long acc = 0;
                    for (int col = 0; col < r; ++col)
                        acc = (acc + class_mats[i][row][col] * s[b][col]) % p;
                    img[row] = acc;
                }
                FpVec coords = solve_in_basis(s, img, p);
                for (int a = 0; a < dim; ++a) rest[a][b] = coords[a];
            }
            int found = 0;
            for (long long lam = 0; lam < p && found < dim; ++lam) {
                FpMat shifted = rest;
                for (int a = 0; a < dim; ++a) shifted[a][a] = ((shifted[a][a] - lam) % p + p) % p;
                auto ker = kernel_basis(shifted, p);
                if (ker.empty()) continue;
                std::vector<FpVec> sub;
                for (auto& kv : ker) {
                    FpVec v((size_t)r, 0);
                    for (int b = 0; b < dim; ++b)
                        for (int row = 0; row < r; ++row)
                            v[row] = (v[row] + kv[b] * s[b][row]) % p;
                    sub.push_back(std::move(v));
                }
                found += (int)sub.size();
                next.push_back(std::move(sub));
            }
            if (found != dim) throw ComputationFailedError("class-sum matrix not diagonalizable mod p");
        }
        spaces = std::move(next);
    }
    if ((int)spaces.size() != r) throw ComputationFailedError("eigenspace refinement did not reach r lines");

    // Central characters: normalize so the identity-class coordinate is 1.
    std::vector<FpVec> omega;
    int id_class = cd.class_of[g->identity];
    for (auto& s : spaces) {
        FpVec w = s[0];
        if (w[id_class] % p == 0) throw ComputationFailedError("central character vanishes at identity class");
        long long inv = mod_inv(w[id_class], p);
        for (auto& v : w) v = v * inv % p;
        omega.push_back(std::move(w));
    }

    // Degrees from the first orthogonality relation, then values mod p.
    long long dmax = (long long)std::sqrt((double)n) + 1;
    std::vector<long long> degrees((size_t)r);
    std::vector<FpVec> valmod((size_t)r, FpVec((size_t)r, 0));
    for (int tindex = 0; tindex < r; ++tindex) {
        const auto& w = omega[tindex];
        long long s = 0;
        for (int i = 0; i < r; ++i)
            s = (s + w[i] * w[cd.inverse_class[i]] % p * mod_inv(cd.sizes[i], p)) % p;
        if (s == 0) throw ComputationFailedError("degree sum vanished mod p");
        long long d2 = n % p * mod_inv(s, p) % p;
        long long deg = 0;
        for (long long d = 1; d <= dmax; ++d)
            if (d * d % p == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw ComputationFailedError("no integer degree matches mod p");
        degrees[tindex] = deg;
        for (int j = 0; j < r; ++j)
            valmod[tindex][j] = deg % p * w[j] % p * mod_inv(cd.sizes[j], p) % p;
    }

    // Exact lift: chi(g_j) is a multiset of element_order(j)-th roots of unity,
    // recovered from the discrete Fourier sums of chi over powers of g_j.
    std::vector<std::vector<CycInt>> values(
        (size_t)r, std::vector<CycInt>((size_t)r, CycInt::zero(t.exponent)));
    for (int tindex = 0; tindex < r; ++tindex) {
        for (int j = 0; j < r; ++j) {
            long long o = cd.element_orders[j];
            long long zo = mod_pow(z, t.exponent / o, p);
            long long zo_inv = mod_inv(zo, p);
            CycInt val = CycInt::zero(t.exponent);
            for (long long u = 0; u < o; ++u) {
                long long acc = 0;
                for (long long v = 0; v < o; ++v) {
                    long long cls = cd.power_class[j][(size_t)v];
                    acc = (acc + valmod[tindex][cls] * mod_pow(zo_inv, u * v % o, p)) % p;
                }
                long long count = acc * mod_inv(o, p) % p;
                if (count > degrees[tindex])
                    throw ComputationFailedError("eigenvalue multiplicity exceeds degree");
                if (count)
                    val = val + CycInt::root_power(t.exponent, u * (t.exponent / o)) * CycInt::integer(t.exponent, count);
            }
            values[tindex][j] = std::move(val);
        }
    }

    // Deterministic row order: degree, then lexicographic reduced values.
    std::vector<int> rows((size_t)r);
    for (int i = 0; i < r; ++i) rows[i] = i;
    auto row_key = [&](int t_) {
        std::vector<long long> key;
        key.push_back(degrees[t_]);
        for (int j = 0; j < r; ++j) {
            auto red = values[t_][j].reduced();
            key.insert(key.end(), red.begin(), red.end());
        }
        return key;
    };
    std::vector<std::vector<long long>> keys((size_t)r);
    for (int i = 0; i < r; ++i) keys[i] = row_key(i);
    std::sort(rows.begin(), rows.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    t.degrees.resize((size_t)r);
    t.values.resize((size_t)r);
    for (int i = 0; i < r; ++i) {
        t.degrees[i] = degrees[rows[i]];
        t.values[i] = std::move(values[rows[i]]);
    }

    // Exact sanity: sum of squared degrees, then both orthogonality relations.
    long long degsum = 0;
    for (long long d : t.degrees) degsum += d * d;
    if (degsum != n) throw ComputationFailedError("degree squares do not sum to |G|");
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            CycInt acc = CycInt::zero(t.exponent);
            for (int j = 0; j < r; ++j)
                acc = acc + CycInt::integer(t.exponent, cd.sizes[j]) * t.values[a][j] *
                                t.values[b][j].conjugate();
            CycInt want = CycInt::integer(t.exponent, a == b ? n : 0);
            if (!(acc == want)) throw ComputationFailedError("row orthogonality fails");
        }
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            CycInt acc = CycInt::zero(t.exponent);
            for (int a = 0; a < r; ++a)
                acc = acc + t.values[a][j] * t.values[a][k].conjugate();
            CycInt want = CycInt::integer(t.exponent, j == k ? n / cd.sizes[j] : 0);
            if (!(acc == want)) throw ComputationFailedError("column orthogonality fails");
        }
    return t;
}

DualAction dual_action(const CharacterTable& table, const Automorphism& phi) {
    if (phi.group.get() != table.group.get()) throw GroupMismatchError("automorphism of a different group");
    const auto& cd = table.classes;
    int r = cd.count;
    DualAction d;
    d.class_permutation.resize((size_t)r);
    for (int j = 0; j < r; ++j) d.class_permutation[j] = cd.class_of[phi(cd.representatives[j])];

    // Reduced forms once per entry for comparisons.
    std::vector<std::vector<std::vector<long long>>> red((size_t)r);
    for (int t = 0; t < r; ++t) {
        red[t].resize((size_t)r);
        for (int j = 0; j < r; ++j) red[t][j] = table.values[t][j].reduced();
    }

    d.character_permutation.assign((size_t)r, -1);
    for (int t = 0; t < r; ++t) {
        // chi_t . phi has value at class j equal to chi_t at class perm[j]
        for (int s = 0; s < r; ++s) {
            bool match = true;
            for (int j = 0; j < r && match; ++j)
                if (red[s][j] != red[t][d.class_permutation[j]]) match = false;
            if (match) {
                if (d.character_permutation[t] >= 0)
                    throw ComputationFailedError("duplicate rows in character table");
                d.character_permutation[t] = s;
            }
        }
        if (d.character_permutation[t] < 0)
            throw ComputationFailedError("chi . phi is not a row of the table");
    }
    for (int j = 0; j < r; ++j)
        if (d.class_permutation[j] == j) ++d.fixed_classes;
    for (int t = 0; t < r; ++t)
        if (d.character_permutation[t] == t) ++d.fixed_characters;
    return d;
}

int fixed_irreducibles(const CharacterTable& table, const Automorphism& phi) {
    return dual_action(table, phi).fixed_characters;
}

TbftReport tbft_check(const CharacterTable& table, const Automorphism& phi) {
    TbftReport rep;
    rep.reidemeister_number = twisted_classes(phi).count;
    rep.fixed_character_count = fixed_irreducibles(table, phi);
    rep.equal = rep.reidemeister_number == rep.fixed_character_count;
    return rep;
}

} // namespace twc
