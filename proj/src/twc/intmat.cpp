#include "intmat.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace twc {

IntMatrix IntMatrix::identity(int k) {
    IntMatrix m;
    m.k = k;
    m.a.assign((size_t)k * k, 0);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m;
    m.k = (int)rows.size();
    m.a.reserve((size_t)m.k * m.k);
    for (const auto& row : rows) {
        if ((int)row.size() != m.k) throw ComputationFailedError("matrix not square");
        for (long long v : row) m.a.emplace_back(v);
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (k != o.k) throw ComputationFailedError("matrix size mismatch");
    IntMatrix r;
    r.k = k;
    r.a.assign((size_t)k * k, 0);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            const BigInt& f = at(i, l);
            if (f == 0) continue;
            for (int j = 0; j < k; ++j) r.at(i, j) += f * o.at(l, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (k != o.k) throw ComputationFailedError("matrix size mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const { return k == o.k && a == o.a; }

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
    if ((int)v.size() != k) throw ComputationFailedError("vector size mismatch");
    std::vector<BigInt> r((size_t)k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r;
    r.k = k;
    r.a.assign((size_t)k * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r.at(j, i) = at(i, j);
    return r;
}

BigInt IntMatrix::determinant() const {
    // Bareiss fraction-free elimination.
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int t = 0; t < k; ++t) {
        int pivot = -1;
        for (int i = t; i < k; ++i)
            if (m.at(i, t) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != t) {
            for (int j = 0; j < k; ++j) std::swap(m.at(t, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = t + 1; i < k; ++i)
            for (int j = t + 1; j < k; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j)) / prev;
        prev = m.at(t, t);
    }
    return sign * m.at(k - 1, k - 1);
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
    std::vector<std::vector<long long>> rows((size_t)k, std::vector<long long>((size_t)k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const BigInt& v = at(i, j);
            if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
                throw ComputationFailedError("matrix entry exceeds 64-bit range");
            rows[i][j] = v.convert_to<long long>();
        }
    return rows;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    BigInt det = m.determinant();
    if (det != 1 && det != -1) throw NotUnimodularError("determinant is " + det.str());
    int k = m.k;
    IntMatrix inv;
    inv.k = k;
    inv.a.assign((size_t)k * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            // cofactor expansion: adj[j][i] = (-1)^{i+j} minor(i,j)
            IntMatrix minor;
            minor.k = k - 1;
            minor.a.reserve((size_t)(k - 1) * (k - 1));
            for (int r = 0; r < k; ++r) {
                if (r == i) continue;
                for (int c = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor.a.push_back(m.at(r, c));
                }
            }
            BigInt cof = (k == 1) ? BigInt(1) : minor.determinant();
            if ((i + j) & 1) cof = -cof;
            inv.at(j, i) = cof * det; // det = +-1, dividing == multiplying
        }
    if (!(m * inv == IntMatrix::identity(k))) throw ComputationFailedError("inverse verification failed");
    return inv;
}

std::optional<int> matrix_order(const IntMatrix& m, int max_order) {
    BigInt det = m.determinant();
    if (det != 1 && det != -1) throw NotUnimodularError("determinant is " + det.str());
    IntMatrix id = IntMatrix::identity(m.k);
    IntMatrix p = m;
    for (int q = 1; q <= max_order; ++q) {
        if (p == id) return q;
        p = p * m;
    }
    return std::nullopt;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
    std::vector<BigInt> out;
    for (int i = 0; i < d.k; ++i) out.push_back(d.at(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    int k = a.k;
    SmithDecomposition s;
    s.u = IntMatrix::identity(k);
    s.v = IntMatrix::identity(k);
    s.d = a;
    IntMatrix& d = s.d;

    auto row_op = [&](int dst, int src, const BigInt& f) { // row_dst -= f * row_src
        for (int j = 0; j < k; ++j) {
            d.at(dst, j) -= f * d.at(src, j);
            s.u.at(dst, j) -= f * s.u.at(src, j);
        }
    };
    auto col_op = [&](int dst, int src, const BigInt& f) { // col_dst -= f * col_src
        for (int i = 0; i < k; ++i) {
            d.at(i, dst) -= f * d.at(i, src);
            s.v.at(i, dst) -= f * s.v.at(i, src);
        }
    };
    auto row_swap = [&](int x, int y) {
        for (int j = 0; j < k; ++j) {
            std::swap(d.at(x, j), d.at(y, j));
            std::swap(s.u.at(x, j), s.u.at(y, j));
        }
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < k; ++i) {
            std::swap(d.at(i, x), d.at(i, y));
            std::swap(s.v.at(i, x), s.v.at(i, y));
        }
    };
    auto row_negate = [&](int x) {
        for (int j = 0; j < k; ++j) {
            d.at(x, j) = -d.at(x, j);
            s.u.at(x, j) = -s.u.at(x, j);
        }
    };

    for (int t = 0; t < k; ++t) {
        while (true) {
            // smallest nonzero magnitude in the trailing block keeps growth down
            int pi = -1, pj = -1;
            BigInt best = 0;
            for (int i = t; i < k; ++i)
                for (int j = t; j < k; ++j) {
                    if (d.at(i, j) == 0) continue;
                    BigInt m = abs(d.at(i, j));
                    if (pi < 0 || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { // trailing block all zero
                pj = -1;
                break;
            }
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);
            if (d.at(t, t) < 0) row_negate(t);

            bool dirty = false;
            for (int i = t + 1; i < k; ++i) {
                if (d.at(i, t) == 0) continue;
                BigInt q = d.at(i, t) / d.at(t, t);
                if (q != 0) row_op(i, t, q);
                if (d.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < k; ++j) {
                if (d.at(t, j) == 0) continue;
                BigInt q = d.at(t, j) / d.at(t, t);
                if (q != 0) col_op(j, t, q);
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue; // remainders became the new, smaller pivots

            // pivot must divide every entry of the rest of the block
            bool fixed = false;
            for (int i = t + 1; i < k && !fixed; ++i)
                for (int j = t + 1; j < k && !fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_op(t, i, BigInt(-1)); // pull the offending row up
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    // Verification: factorization, unimodularity, shape.
    if (!(s.u * a * s.v == d)) throw ComputationFailedError("SNF factorization check failed");
    BigInt du = s.u.determinant(), dv = s.v.determinant();
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        throw ComputationFailedError("SNF transforms are not unimodular");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && d.at(i, j) != 0) throw ComputationFailedError("SNF result not diagonal");
    for (int i = 0; i < k; ++i)
        if (d.at(i, i) < 0) throw ComputationFailedError("SNF diagonal entry negative");
    for (int i = 0; i + 1 < k; ++i) {
        const BigInt& x = d.at(i, i);
        const BigInt& y = d.at(i + 1, i + 1);
        if (x == 0 && y != 0) throw ComputationFailedError("SNF zero ordering violated");
        if (x != 0 && y % x != 0) throw ComputationFailedError("SNF divisibility chain violated");
    }
    return s;
}

std::vector<BigInt> FiniteAbelianQuotient::project(const std::vector<BigInt>& x) const {
    std::vector<BigInt> ux = u.apply(x);
    std::vector<BigInt> out;
    out.reserve(factors.size());
    for (size_t t = 0; t < factors.size(); ++t) {
        BigInt r = ux[(size_t)factor_rows[t]] % factors[t];
        if (r < 0) r += factors[t];
        out.push_back(r);
    }
    return out;
}

std::vector<BigInt> FiniteAbelianQuotient::project_ll(const std::vector<long long>& x) const {
    std::vector<BigInt> b(x.begin(), x.end());
    return project(b);
}

std::vector<BigInt> FiniteAbelianQuotient::lift(const std::vector<BigInt>& residues) const {
    if (residues.size() != factors.size()) throw ComputationFailedError("residue tuple size mismatch");
    std::vector<BigInt> target((size_t)k, 0);
    for (size_t t = 0; t < factors.size(); ++t) target[(size_t)factor_rows[t]] = residues[t];
    return unimodular_inverse(u).apply(target);
}

ZkClassData reidemeister_zk(const IntMatrix& dmat, int) {
    BigInt det = dmat.determinant();
    if (det != 1 && det != -1) throw NotUnimodularError("determinant is " + det.str());
    IntMatrix m = IntMatrix::identity(dmat.k) - dmat;
    BigInt dm = m.determinant();
    ZkClassData out;
    out.fixed_sublattice_trivial = (dm != 0);
    if (dm == 0) return out; // infinitely many classes
    out.finite = true;
    out.count = abs(dm);

    SmithDecomposition s = smith_normal_form(m);
    FiniteAbelianQuotient q;
    q.k = dmat.k;
    q.u = s.u;
    q.order = 1;
    for (int i = 0; i < dmat.k; ++i) {
        BigInt di = s.d.at(i, i);
        q.order *= di;
        if (di > 1) {
            q.factors.push_back(di);
            q.factor_rows.push_back(i);
        }
    }
    if (q.order != out.count) throw ComputationFailedError("quotient order != |det(I-d)|");
    out.quotient = std::move(q);
    return out;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& m, const std::vector<BigInt>& b) {
    SmithDecomposition s = smith_normal_form(m);
    std::vector<BigInt> ub = s.u.apply(b);
    std::vector<BigInt> y((size_t)m.k, 0);
    for (int i = 0; i < m.k; ++i) {
        const BigInt& di = s.d.at(i, i);
        if (di == 0) {
            if (ub[(size_t)i] != 0) return std::nullopt;
        } else {
            if (ub[(size_t)i] % di != 0) return std::nullopt;
            y[(size_t)i] = ub[(size_t)i] / di;
        }
    }
    std::vector<BigInt> w = s.v.apply(y);
    if (!(m.apply(w) == b)) throw ComputationFailedError("integer solve verification failed");
    return w;
}

BigInt dual_fixed_count_abelian(const FiniteAbelianQuotient& q, const IntMatrix& d) {
    if (q.order > 1000000) throw BudgetExceededError("character group too large to enumerate");
    size_t nf = q.factors.size();
    std::vector<long long> f(nf);
    for (size_t i = 0; i < nf; ++i) f[i] = q.factors[i].convert_to<long long>();

    // Map induced by d on residue tuples, evaluated on the standard generators.
    std::vector<std::vector<long long>> delta(nf, std::vector<long long>(nf));
    for (size_t j = 0; j < nf; ++j) {
        std::vector<BigInt> ej(nf, 0);
        ej[j] = 1;
        std::vector<BigInt> img = q.project(d.apply(q.lift(ej)));
        for (size_t i = 0; i < nf; ++i) delta[i][j] = img[i].convert_to<long long>();
    }

    long long lcm_all = 1;
    for (size_t i = 0; i < nf; ++i) lcm_all = std::lcm(lcm_all, f[i]);

    // chi_c is delta-fixed iff for every j:
    //   sum_i c_i * delta[i][j] * (L/f_i) == c_j * (L/f_j)  (mod L)
    long long fixed = 0;
    std::vector<long long> c(nf, 0);
    while (true) {
        bool ok = true;
        for (size_t j = 0; j < nf && ok; ++j) {
            long long lhs = 0;
            for (size_t i = 0; i < nf; ++i)
                lhs = (lhs + c[i] % lcm_all * (delta[i][j] % lcm_all) % lcm_all * (lcm_all / f[i])) % lcm_all;
            long long rhs = c[j] * (lcm_all / f[j]) % lcm_all;
            if ((lhs - rhs) % lcm_all != 0) ok = false;
        }
        if (ok) ++fixed;
        // next tuple
        size_t pos = 0;
        while (pos < nf && ++c[pos] == f[pos]) c[pos++] = 0;
        if (pos == nf) break;
        if (nf == 0) break;
    }
    if (nf == 0) fixed = 1; // trivial group: only the trivial character
    return BigInt(fixed);
}

} // namespace twc
