#include "group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace twc {

int FiniteGroup::pow(int a, long long e) const {
    if (e < 0) return pow(inverse[a], -e);
    int r = identity;
    int base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int r = a, k = 1;
    while (r != identity) {
        r = mul(r, a);
        ++k;
        if (k > n) throw ComputationFailedError("element order exceeds group order");
    }
    return k;
}

long long FiniteGroup::exponent() const {
    long long e = 1;
    for (int a = 0; a < n; ++a) e = std::lcm(e, (long long)element_order(a));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < n; ++a) {
        bool central = true;
        for (int b = 0; b < n && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> FiniteGroup::order_histogram() const {
    std::vector<int> h(n + 1, 0);
    for (int a = 0; a < n; ++a) ++h[element_order(a)];
    return h;
}

GroupPtr build_group_flat(int n, std::vector<int> flat, const BuildOptions& opts) {
    if (n <= 0) throw NotAGroupError("order must be positive");
    if ((long long)flat.size() != (long long)n * n) throw NotAGroupError("table size is not n*n");
    for (int v : flat)
        if (v < 0 || v >= n) throw NotAGroupError("table entry out of range [0,n)");

    auto g = std::make_shared<FiniteGroup>();
    g->name = opts.name;
    g->n = n;
    g->table = std::move(flat);

    // Latin square: every row and column a permutation.
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int v = g->table[i * n + j];
            if (seen[v]) throw NotAGroupError("row " + std::to_string(i) + " repeats element " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            int v = g->table[i * n + j];
            if (seen[v]) throw NotAGroupError("column " + std::to_string(j) + " repeats element " + std::to_string(v));
            seen[v] = 1;
        }
    }

    // Two-sided identity.
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            if (g->table[i * n + j] != j || g->table[j * n + i] != j) ok = false;
        if (ok) {
            e = i;
            break;
        }
    }
    if (e < 0) throw NotAGroupError("no two-sided identity");
    g->identity = e;

    // Two-sided inverses.
    g->inverse.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g->table[i * n + j] == e) {
                if (g->table[j * n + i] != e)
                    throw NotAGroupError("one-sided inverse at element " + std::to_string(i));
                g->inverse[i] = j;
                break;
            }
        }
        if (g->inverse[i] < 0) throw NotAGroupError("no inverse for element " + std::to_string(i));
    }

    // Associativity: exhaustive for small n, sampled otherwise.
    bool exhaustive = opts.force_exhaustive || n <= opts.exhaustive_limit;
    auto check = [&](int a, int b, int c) {
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
            throw NotAGroupError("associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (exhaustive) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        long long trials = (long long)opts.sampled_triples_factor * n * n;
        for (long long t = 0; t < trials; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    return g;
}

GroupPtr build_group(const std::vector<std::vector<int>>& table, const BuildOptions& opts) {
    int n = (int)table.size();
    std::vector<int> flat;
    flat.reserve((size_t)n * n);
    for (const auto& row : table) {
        if ((int)row.size() != n) throw NotAGroupError("table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return build_group_flat(n, std::move(flat), opts);
}

GroupMap make_homomorphism(GroupPtr source, GroupPtr target, std::vector<int> image) {
    if (!source || !target) throw GroupMismatchError("null group");
    if ((int)image.size() != source->n) throw GroupMismatchError("image size != source order");
    for (int v : image)
        if (v < 0 || v >= target->n) throw GroupMismatchError("image element out of range");
    for (int a = 0; a < source->n; ++a)
        for (int b = 0; b < source->n; ++b)
            if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
                throw GroupMismatchError("not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return GroupMap{std::move(source), std::move(target), std::move(image)};
}

Automorphism make_automorphism(GroupPtr group, std::vector<int> image) {
    if (!group) throw GroupMismatchError("null group");
    int n = group->n;
    if ((int)image.size() != n) throw GroupMismatchError("image size != group order");
    std::vector<char> hit(n, 0);
    for (int v : image) {
        if (v < 0 || v >= n) throw GroupMismatchError("image element out of range");
        if (hit[v]) throw GroupMismatchError("image not a bijection");
        hit[v] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image[group->mul(a, b)] != group->mul(image[a], image[b]))
                throw GroupMismatchError("not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");

    Automorphism f;
    f.group = std::move(group);
    f.image = std::move(image);

    // Order = lcm of cycle lengths of the permutation.
    int norder = 1;
    std::vector<char> visited(n, 0);
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        int len = 0, x = s;
        do {
            visited[x] = 1;
            x = f.image[x];
            ++len;
        } while (x != s);
        norder = (int)std::lcm((long long)norder, (long long)len);
    }
    f.order = norder;
    return f;
}

Automorphism identity_automorphism(GroupPtr group) {
    std::vector<int> image(group->n);
    std::iota(image.begin(), image.end(), 0);
    return make_automorphism(std::move(group), std::move(image));
}

Automorphism inner_automorphism(GroupPtr group, int g) {
    std::vector<int> image(group->n);
    for (int x = 0; x < group->n; ++x) image[x] = group->conj(g, x);
    return make_automorphism(std::move(group), std::move(image));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.group.get() != g.group.get()) throw GroupMismatchError("compose over different groups");
    std::vector<int> image(f.group->n);
    for (int x = 0; x < f.group->n; ++x) image[x] = f.image[g.image[x]];
    return make_automorphism(f.group, std::move(image));
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> members) {
    if (!parent) throw GroupMismatchError("null group");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int m = (int)members.size();
    std::vector<int> back(parent->n, -1);
    for (int i = 0; i < m; ++i) {
        if (members[i] < 0 || members[i] >= parent->n) throw GroupMismatchError("member out of range");
        back[members[i]] = i;
    }
    std::vector<int> flat((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int prod = parent->mul(members[i], members[j]);
            if (back[prod] < 0) throw NotAGroupError("member set not closed under multiplication");
            flat[i * m + j] = back[prod];
        }
    BuildOptions opts;
    opts.name = parent->name.empty() ? "subgroup" : parent->name + ".sub";
    opts.force_exhaustive = m <= 64;
    Subgroup s;
    s.parent = std::move(parent);
    s.as_group = build_group_flat(m, std::move(flat), opts);
    s.members = std::move(members);
    s.parent_to_sub = std::move(back);
    return s;
}

Subgroup generated_subgroup(GroupPtr parent, const std::vector<int>& generators) {
    if (!parent) throw GroupMismatchError("null group");
    std::set<int> got{parent->identity};
    std::queue<int> work;
    work.push(parent->identity);
    for (int g : generators) {
        if (g < 0 || g >= parent->n) throw GroupMismatchError("generator out of range");
        if (got.insert(g).second) work.push(g);
    }
    // Left-multiplying by generators reaches the whole subgroup (finite order
    // makes inverses positive powers).
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (int g : generators) {
            int y = parent->mul(g, x);
            if (got.insert(y).second) work.push(y);
        }
    }
    return make_subgroup(std::move(parent), std::vector<int>(got.begin(), got.end()));
}

Subgroup whole_subgroup(GroupPtr parent) {
    std::vector<int> all(parent->n);
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(std::move(parent), std::move(all));
}

bool is_normal(const Subgroup& h) {
    const auto& g = *h.parent;
    for (int a = 0; a < g.n; ++a)
        for (int x : h.members)
            if (!h.contains(g.conj(a, x))) return false;
    return true;
}

DerivedSeries derived_series(GroupPtr g) {
    DerivedSeries out;
    out.chain.push_back(whole_subgroup(g));
    while (true) {
        const Subgroup& cur = out.chain.back();
        std::set<int> comms;
        for (int a : cur.members)
            for (int b : cur.members) comms.insert(g->commutator(a, b));
        Subgroup next = generated_subgroup(g, std::vector<int>(comms.begin(), comms.end()));
        if (next.size() == cur.size()) break; // stabilized (perfect or trivial)
        out.chain.push_back(std::move(next));
        if (out.chain.back().is_trivial()) break;
    }
    out.solvable = out.chain.back().is_trivial();
    if (out.solvable) out.derived_length = (int)out.chain.size() - 1;
    return out;
}

Quotient quotient_group(GroupPtr g, const Subgroup& h) {
    if (h.parent.get() != g.get()) throw GroupMismatchError("subgroup of a different group");
    if (!is_normal(h)) throw NotNormalError("quotient requires a normal subgroup");
    int n = g->n;
    std::vector<int> coset_min(n, -1); // element -> minimal element of its coset
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_min[x] >= 0) continue;
        // left coset x*H; since x is the smallest unassigned element it is the
        // minimal member of its coset
        for (int m : h.members) coset_min[g->mul(x, m)] = x;
        reps.push_back(x);
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, int> rep_index;
    for (int i = 0; i < (int)reps.size(); ++i) rep_index[reps[i]] = i;

    int q = (int)reps.size();
    std::vector<int> flat((size_t)q * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            flat[i * q + j] = rep_index.at(coset_min[g->mul(reps[i], reps[j])]);

    BuildOptions opts;
    opts.name = (g->name.empty() ? "G" : g->name) + "/H";
    opts.force_exhaustive = q <= 64;
    Quotient out;
    out.group = build_group_flat(q, std::move(flat), opts);
    out.projection.resize(n);
    for (int x = 0; x < n; ++x) out.projection[x] = rep_index.at(coset_min[x]);
    out.coset_rep = std::move(reps);
    return out;
}

std::optional<std::vector<int>> extend_generator_images(
    const FiniteGroup& src, const FiniteGroup& dst,
    const std::vector<int>& gens, const std::vector<int>& gen_images,
    bool require_bijective) {
    if (gens.size() != gen_images.size()) throw GroupMismatchError("generator/image count mismatch");
    std::vector<int> image(src.n, -1);
    image[src.identity] = dst.identity;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (image[gens[i]] >= 0 && image[gens[i]] != gen_images[i]) return std::nullopt;
        image[gens[i]] = gen_images[i];
    }
    // BFS closure: if f(x) is known, f(x*g) := f(x)*f(g) must be consistent.
    std::vector<int> known;
    known.push_back(src.identity);
    for (int g : gens)
        if (g != src.identity) known.push_back(g);
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());
    std::queue<int> work;
    for (int x : known) work.push(x);
    size_t defined = known.size();
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (int g : gens) {
            int y = src.mul(x, g);
            int fy = dst.mul(image[x], image[g]);
            if (image[y] < 0) {
                image[y] = fy;
                ++defined;
                work.push(y);
            } else if (image[y] != fy) {
                return std::nullopt;
            }
        }
    }
    if (defined != (size_t)src.n) return std::nullopt; // gens do not generate src
    // Full homomorphism check (closure only constrained products with generators).
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b)
            if (image[src.mul(a, b)] != dst.mul(image[a], image[b])) return std::nullopt;
    if (require_bijective) {
        if (src.n != dst.n) return std::nullopt;
        std::vector<char> hit(dst.n, 0);
        for (int v : image) {
            if (hit[v]) return std::nullopt;
            hit[v] = 1;
        }
    }
    return image;
}

std::vector<int> small_generating_set(const FiniteGroup& g) {
    std::vector<int> order(g.n);
    std::vector<int> by_order(g.n);
    std::iota(by_order.begin(), by_order.end(), 0);
    for (int x = 0; x < g.n; ++x) order[x] = g.element_order(x);
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) { return order[a] > order[b]; });

    std::vector<int> gens;
    std::set<int> closure{g.identity};
    for (int x : by_order) {
        if (closure.count(x)) continue;
        gens.push_back(x);
        // close
        std::queue<int> work;
        std::set<int> next(closure);
        next.insert(x);
        for (int y : next) work.push(y);
        while (!work.empty()) {
            int a = work.front();
            work.pop();
            for (int b : gens) {
                int c = g.mul(a, b);
                if (next.insert(c).second) work.push(c);
                c = g.mul(b, a);
                if (next.insert(c).second) work.push(c);
            }
        }
        closure = std::move(next);
        if ((int)closure.size() == g.n) break;
    }
    return gens;
}

} // namespace twc
