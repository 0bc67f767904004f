#include "corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace twc {

GroupPtr cyclic_group(int n) {
    std::vector<int> t((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[(size_t)i * n + j] = (i + j) % n;
    BuildOptions o;
    o.name = "C" + std::to_string(n);
    return build_group_flat(n, std::move(t), o);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->n, nb = b->n, n = na * nb;
    std::vector<int> t((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
            t[(size_t)i * n + j] = a->mul(ai, aj) * nb + b->mul(bi, bj);
        }
    BuildOptions o;
    o.name = a->name + "x" + b->name;
    return build_group_flat(n, std::move(t), o);
}

GroupPtr dihedral_group(int n) {
    int order = 2 * n;
    std::vector<int> t((size_t)order * order);
    auto idx = [n](int i, int e) { return i + n * e; };
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    int rot = e ? (i - j % n + n) % n : (i + j) % n;
                    t[(size_t)idx(i, e) * order + idx(j, f)] = idx(rot, e ^ f);
                }
    BuildOptions o;
    o.name = "D" + std::to_string(n);
    return build_group_flat(order, std::move(t), o);
}

GroupPtr dicyclic_group(int n) {
    int m = 2 * n, order = 4 * n;
    std::vector<int> t((size_t)order * order);
    auto idx = [m](int i, int e) { return i + m * e; };
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < m; ++j)
                for (int f = 0; f < 2; ++f) {
                    int rot = e ? (i - j + m) % m : (i + j) % m;
                    int flip = e ^ f;
                    if (e && f) rot = (rot + n) % m; // b^2 = a^n
                    t[(size_t)idx(i, e) * order + idx(j, f)] = idx(rot, flip);
                }
    BuildOptions o;
    o.name = "Dic" + std::to_string(n);
    return build_group_flat(order, std::move(t), o);
}

GroupPtr semidirect_cyclic(int n, int m, int t, const std::string& name) {
    long long acc = 1;
    for (int i = 0; i < m; ++i) acc = acc * t % n;
    if (acc != 1) throw NotAGroupError("twist " + std::to_string(t) + " has wrong order");
    std::vector<int> powt((size_t)m);
    powt[0] = 1 % n;
    for (int j = 1; j < m; ++j) powt[(size_t)j] = (int)((long long)powt[(size_t)j - 1] * t % n);
    int order = n * m;
    std::vector<int> tab((size_t)order * order);
    auto idx = [n](int i, int j) { return i + n * j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < m; ++y)
                    tab[(size_t)idx(i, j) * order + idx(x, y)] =
                        idx((int)((i + (long long)x * powt[(size_t)j]) % n), (j + y) % m);
    BuildOptions o;
    o.name = name;
    return build_group_flat(order, std::move(tab), o);
}

GroupPtr semidirect_general(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<int>>& action, const std::string& name) {
    if ((int)action.size() != h->n) throw NotAGroupError("action must cover every acting element");
    int nn = n->n, nh = h->n, order = nn * nh;
    std::vector<int> tab((size_t)order * order);
    auto idx = [nh](int x, int a) { return x * nh + a; };
    for (int x = 0; x < nn; ++x)
        for (int a = 0; a < nh; ++a)
            for (int y = 0; y < nn; ++y)
                for (int b = 0; b < nh; ++b)
                    tab[(size_t)idx(x, a) * order + idx(y, b)] =
                        idx(n->mul(x, action[(size_t)a][(size_t)y]), h->mul(a, b));
    BuildOptions o;
    o.name = name;
    return build_group_flat(order, std::move(tab), o);
}

GroupPtr renamed(const GroupPtr& g, const std::string& name) {
    BuildOptions o;
    o.name = name;
    return build_group_flat(g->n, g->table, o);
}

std::vector<int> parse_permutation(const std::string& text, int points) {
    std::vector<int> perm((size_t)points);
    for (int i = 0; i < points; ++i) perm[(size_t)i] = i;
    std::vector<char> used((size_t)points, 0);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw ParseError("expected '(' at position " + std::to_string(pos) + " in \"" + text + "\"");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos >= text.size())
                throw ParseError("unterminated cycle in \"" + text + "\"");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (!isdigit((unsigned char)text[pos]))
                throw ParseError("expected point number at position " + std::to_string(pos) + " in \"" +
                                 text + "\"");
            int v = 0;
            while (pos < text.size() && isdigit((unsigned char)text[pos])) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            if (v < 1 || v > points)
                throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(points));
            if (used[(size_t)(v - 1)])
                throw ParseError("point " + std::to_string(v) + " repeated in \"" + text + "\"");
            used[(size_t)(v - 1)] = 1;
            cycle.push_back(v - 1);
        }
        for (size_t i = 0; i < cycle.size(); ++i)
            perm[(size_t)cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return perm;
}

GroupPtr permutation_group(const std::vector<std::string>& generators, int points,
                           const std::string& name) {
    std::set<std::vector<int>> elems;
    std::vector<int> id((size_t)points);
    for (int i = 0; i < points; ++i) id[(size_t)i] = i;
    elems.insert(id);
    std::vector<std::vector<int>> gens;
    for (const auto& s : generators) {
        gens.push_back(parse_permutation(s, points));
        elems.insert(gens.back());
    }
    auto compose = [points](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r((size_t)points);
        for (int i = 0; i < points; ++i) r[(size_t)i] = p[(size_t)q[(size_t)i]];
        return r;
    };
    std::vector<std::vector<int>> queue(elems.begin(), elems.end());
    while (!queue.empty()) {
        std::vector<int> x = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            std::vector<int> y = compose(g, x);
            if (elems.insert(y).second) {
                if (elems.size() > 20000) throw NotAGroupError("permutation closure too large");
                queue.push_back(y);
            }
        }
    }
    std::vector<std::vector<int>> list(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < list.size(); ++i) index.emplace(list[i], (int)i);
    int n = (int)list.size();
    std::vector<int> tab((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tab[(size_t)i * n + j] = index.at(compose(list[(size_t)i], list[(size_t)j]));
    BuildOptions o;
    o.name = name;
    return build_group_flat(n, std::move(tab), o);
}

namespace {

GroupPtr sl23() {
    GroupPtr q8 = dicyclic_group(2); // a = index 1 (order 4), b = index 4
    const FiniteGroup& q = *q8;
    int a = 1, b = 4;
    // order-3 automorphism a -> b -> ab -> a
    std::vector<int> psi((size_t)q.n);
    int ab = q.mul(a, b);
    for (int i = 0; i < 4; ++i)
        for (int e = 0; e < 2; ++e) {
            int img = q.identity;
            for (int t = 0; t < i; ++t) img = q.mul(img, b);
            if (e) img = q.mul(img, ab);
            psi[(size_t)(i + 4 * e)] = img;
        }
    std::vector<std::vector<int>> action(3);
    std::vector<int> id((size_t)q.n);
    for (int i = 0; i < q.n; ++i) id[(size_t)i] = i;
    action[0] = id;
    action[1] = psi;
    action[2].resize((size_t)q.n);
    for (int i = 0; i < q.n; ++i) action[2][(size_t)i] = psi[(size_t)psi[(size_t)i]];
    return semidirect_general(q8, cyclic_group(3), action, "SL23");
}

GroupPtr pauli16() {
    GroupPtr d4c4 = direct_product(dihedral_group(4), cyclic_group(4));
    // (r^2, c^2): r^2 = rotation index 2 in D4, c^2 = 2 in C4
    int z = 2 * 4 + 2;
    Subgroup center_z = generated_subgroup(d4c4, {z});
    Quotient q = quotient_group(d4c4, center_z);
    return renamed(q.group, "Pauli16");
}

std::vector<std::vector<int>> inversion_action(const GroupPtr& n) {
    std::vector<std::vector<int>> action(2);
    action[0].resize((size_t)n->n);
    action[1].resize((size_t)n->n);
    for (int i = 0; i < n->n; ++i) {
        action[0][(size_t)i] = i;
        action[1][(size_t)i] = n->inv(i);
    }
    return action;
}

GroupPtr c2sq_semi_c4() {
    GroupPtr v = direct_product(cyclic_group(2), cyclic_group(2));
    // C4 generator swaps the two factors: element x*2+y -> y*2+x
    std::vector<int> swap_perm{0, 2, 1, 3};
    std::vector<int> id{0, 1, 2, 3};
    std::vector<std::vector<int>> action{id, swap_perm, id, swap_perm};
    return semidirect_general(v, cyclic_group(4), action, "(C2xC2):C4");
}

GroupPtr c3_semi_d4() {
    GroupPtr c3 = cyclic_group(3);
    GroupPtr d4 = dihedral_group(4);
    // kernel of the action is the Klein subgroup {e, r^2, s, r^2 s}; taking
    // the kernel to be <r> instead would rebuild D12
    std::vector<std::vector<int>> action((size_t)d4->n);
    for (int h = 0; h < d4->n; ++h) {
        bool invert = (h % 4) % 2 == 1;
        action[(size_t)h].resize(3);
        for (int i = 0; i < 3; ++i) action[(size_t)h][(size_t)i] = invert ? (3 - i) % 3 : i;
    }
    return semidirect_general(c3, d4, action, "C3:D4");
}

std::vector<NamedGroup> build_corpus() {
    std::vector<NamedGroup> out;
    auto add = [&out](const GroupPtr& g) { out.push_back({g->name, g}); };

    GroupPtr c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
    GroupPtr s3 = permutation_group({"(1 2)", "(1 2 3)"}, 3, "S3");
    GroupPtr a4 = permutation_group({"(1 2 3)", "(1 2)(3 4)"}, 4, "A4");
    GroupPtr d4 = dihedral_group(4);
    GroupPtr q8 = renamed(dicyclic_group(2), "Q8");
    GroupPtr dic3 = dicyclic_group(3);

    add(cyclic_group(1));
    add(c2);
    add(c3);
    add(c4);
    add(direct_product(c2, c2));
    add(cyclic_group(5));
    add(cyclic_group(6));
    add(s3);
    add(cyclic_group(7));
    add(cyclic_group(8));
    add(direct_product(c4, c2));
    add(direct_product(direct_product(c2, c2), c2));
    add(d4);
    add(q8);
    add(cyclic_group(9));
    add(direct_product(c3, c3));
    add(cyclic_group(10));
    add(dihedral_group(5));
    add(cyclic_group(11));
    add(cyclic_group(12));
    add(direct_product(cyclic_group(6), c2));
    add(dihedral_group(6));
    add(dic3);
    add(a4);
    add(cyclic_group(13));
    add(cyclic_group(14));
    add(dihedral_group(7));
    add(cyclic_group(15));
    add(cyclic_group(16));
    add(direct_product(c4, c4));
    add(direct_product(cyclic_group(8), c2));
    add(direct_product(direct_product(c4, c2), c2));
    add(direct_product(direct_product(direct_product(c2, c2), c2), c2));
    add(dihedral_group(8));
    add(semidirect_cyclic(8, 2, 3, "SD16"));
    add(semidirect_cyclic(8, 2, 5, "M16"));
    add(renamed(dicyclic_group(4), "Q16"));
    add(direct_product(d4, c2));
    add(direct_product(q8, c2));
    add(semidirect_cyclic(4, 4, 3, "C4:C4"));
    add(c2sq_semi_c4());
    add(pauli16());
    add(cyclic_group(17));
    add(cyclic_group(18));
    add(direct_product(cyclic_group(6), c3));
    add(dihedral_group(9));
    add(direct_product(c3, s3));
    add(semidirect_general(direct_product(c3, c3), c2,
                           inversion_action(direct_product(c3, c3)), "(C3xC3):C2"));
    add(cyclic_group(19));
    add(cyclic_group(20));
    add(direct_product(cyclic_group(10), c2));
    add(dihedral_group(10));
    add(dicyclic_group(5));
    add(semidirect_cyclic(5, 4, 2, "C5:C4"));
    add(cyclic_group(21));
    add(semidirect_cyclic(7, 3, 2, "C7:C3"));
    add(cyclic_group(22));
    add(dihedral_group(11));
    add(cyclic_group(23));
    add(cyclic_group(24));
    add(direct_product(cyclic_group(12), c2));
    add(direct_product(direct_product(cyclic_group(6), c2), c2));
    add(semidirect_cyclic(3, 8, 2, "C3:C8"));
    add(sl23());
    add(dicyclic_group(6));
    add(direct_product(c4, s3));
    add(dihedral_group(12));
    add(direct_product(c2, dic3));
    add(c3_semi_d4());
    add(direct_product(c3, d4));
    add(direct_product(c3, q8));
    add(permutation_group({"(1 2 3 4)", "(1 2)"}, 4, "S4"));
    add(direct_product(c2, a4));
    add(direct_product(direct_product(c2, c2), s3));
    add(permutation_group({"(1 2 3 4 5)", "(1 2)(3 4)"}, 5, "A5"));

    std::stable_sort(out.begin(), out.end(),
                     [](const NamedGroup& a, const NamedGroup& b) { return a.group->n < b.group->n; });
    return out;
}

} // namespace

const std::vector<NamedGroup>& corpus() {
    static const std::vector<NamedGroup> c = build_corpus();
    return c;
}

GroupPtr corpus_group(const std::string& name) {
    for (const auto& ng : corpus())
        if (ng.name == name) return ng.group;
    throw ParseError("no bundled group named \"" + name + "\"");
}

namespace {

std::vector<int> histogram_of(const FiniteGroup& g, const std::vector<int>& members) {
    std::vector<int> h((size_t)g.n + 1, 0);
    for (int m : members) ++h[(size_t)g.element_order(m)];
    return h;
}

std::vector<int> class_size_multiset(const FiniteGroup& g) {
    std::vector<int> cls((size_t)g.n, -1);
    std::vector<int> sizes;
    for (int x = 0; x < g.n; ++x) {
        if (cls[(size_t)x] >= 0) continue;
        int size = 0;
        std::vector<int> stack{x};
        cls[(size_t)x] = x;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            ++size;
            for (int a = 0; a < g.n; ++a) {
                int z = g.conj(a, y);
                if (cls[(size_t)z] < 0) {
                    cls[(size_t)z] = x;
                    stack.push_back(z);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

struct Fingerprint {
    int n;
    std::vector<int> order_hist;
    std::vector<int> center_hist;
    std::vector<int> derived_hist;
    std::vector<int> abelianization_hist;
    int square_count;
    std::vector<int> class_sizes;

    bool operator==(const Fingerprint& o) const = default;
};

Fingerprint fingerprint(const FiniteGroup& g, const GroupPtr& gp) {
    Fingerprint f;
    f.n = g.n;
    f.order_hist = g.order_histogram();
    f.center_hist = histogram_of(g, g.center());

    std::vector<int> comms;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) comms.push_back(g.commutator(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Subgroup derived = generated_subgroup(gp, comms);
    f.derived_hist = histogram_of(g, derived.members);

    Quotient ab = quotient_group(gp, derived);
    f.abelianization_hist = ab.group->order_histogram();

    std::set<int> squares;
    for (int a = 0; a < g.n; ++a) squares.insert(g.mul(a, a));
    f.square_count = (int)squares.size();
    f.class_sizes = class_size_multiset(g);
    return f;
}

bool search_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                        std::vector<int>& images, size_t level) {
    if (level == gens.size())
        return extend_generator_images(a, b, gens, images, true).has_value();
    int want = a.element_order(gens[level]);
    for (int cand = 0; cand < b.n; ++cand) {
        if (b.element_order(cand) != want) continue;
        bool dup = false;
        for (size_t i = 0; i < level; ++i)
            if (images[i] == cand) dup = true;
        if (dup) continue;
        // orders of pairwise products must match for a homomorphism to exist
        bool ok = true;
        for (size_t i = 0; i < level && ok; ++i)
            if (a.element_order(a.mul(gens[i], gens[level])) != b.element_order(b.mul(images[i], cand)))
                ok = false;
        if (!ok) continue;
        images[level] = cand;
        if (search_isomorphism(a, b, gens, images, level + 1)) return true;
    }
    return false;
}

} // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.n != b.n) return false;
    GroupPtr ap = build_group_flat(a.n, a.table);
    GroupPtr bp = build_group_flat(b.n, b.table);
    if (!(fingerprint(a, ap) == fingerprint(b, bp))) return false;
    std::vector<int> gens = small_generating_set(a);
    std::vector<int> images(gens.size(), -1);
    return search_isomorphism(a, b, gens, images, 0);
}

} // namespace twc
