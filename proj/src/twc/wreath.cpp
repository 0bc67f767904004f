#include "wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "twisted.hpp"

namespace twc {

namespace {

std::string point_str(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

long long linf_dist(const Point& a, const Point& b) {
    long long m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::llabs(a[i] - b[i]));
    return m;
}

} // namespace

Point point_add(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point point_neg(const Point& a) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

int SigmaElement::value_at(const Point& p, int identity) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), p,
                               [](const std::pair<Point, int>& e, const Point& q) { return e.first < q; });
    if (it != entries.end() && it->first == p) return it->second;
    return identity;
}

std::vector<Point> SigmaElement::support() const {
    std::vector<Point> s;
    s.reserve(entries.size());
    for (const auto& e : entries) s.push_back(e.first);
    return s;
}

SigmaElement sigma_canonical(const FiniteGroup& g, std::vector<std::pair<Point, int>> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    SigmaElement out;
    size_t i = 0;
    while (i < entries.size()) {
        Point p = entries[i].first;
        int v = entries[i].second;
        if (v < 0 || v >= g.n) throw ParseError("element index out of range in sparse map");
        ++i;
        while (i < entries.size() && entries[i].first == p) {
            int w = entries[i].second;
            if (w < 0 || w >= g.n) throw ParseError("element index out of range in sparse map");
            v = g.mul(v, w);
            ++i;
        }
        if (v != g.identity) out.entries.emplace_back(std::move(p), v);
    }
    return out;
}

SigmaElement sigma_mul(const FiniteGroup& g, const SigmaElement& a, const SigmaElement& b) {
    SigmaElement out;
    out.entries.reserve(a.entries.size() + b.entries.size());
    size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        bool take_a;
        if (i == a.entries.size())
            take_a = false;
        else if (j == b.entries.size())
            take_a = true;
        else if (a.entries[i].first == b.entries[j].first) {
            int v = g.mul(a.entries[i].second, b.entries[j].second);
            if (v != g.identity) out.entries.emplace_back(a.entries[i].first, v);
            ++i;
            ++j;
            continue;
        } else
            take_a = a.entries[i].first < b.entries[j].first;
        if (take_a)
            out.entries.push_back(a.entries[i++]);
        else
            out.entries.push_back(b.entries[j++]);
    }
    return out;
}

SigmaElement sigma_inv(const FiniteGroup& g, const SigmaElement& a) {
    SigmaElement out = a;
    for (auto& e : out.entries) e.second = g.inv(e.second);
    return out;
}

SigmaElement sigma_conj(const FiniteGroup& g, const SigmaElement& u, const SigmaElement& x) {
    return sigma_mul(g, sigma_mul(g, u, x), sigma_inv(g, u));
}

SigmaElement sigma_shift(const SigmaElement& a, const Point& z) {
    SigmaElement out = a;
    for (auto& e : out.entries) e.first = point_add(e.first, z);
    return out;
}

SigmaElement sigma_delta(const FiniteGroup& g, const Point& p, int value) {
    SigmaElement out;
    if (value < 0 || value >= g.n) throw ParseError("element index out of range");
    if (value != g.identity) out.entries.emplace_back(p, value);
    return out;
}

long long sigma_diameter(const SigmaElement& a) {
    long long m = 0;
    for (size_t i = 0; i < a.entries.size(); ++i)
        for (size_t j = i + 1; j < a.entries.size(); ++j)
            m = std::max(m, linf_dist(a.entries[i].first, a.entries[j].first));
    return m;
}

bool sigma_in_window(const SigmaElement& a, long long w) {
    for (const auto& e : a.entries)
        for (long long c : e.first)
            if (c > w || c < -w) return false;
    return true;
}

void require_window(const SigmaElement& a, long long w, const char* where) {
    for (const auto& e : a.entries)
        for (long long c : e.first)
            if (c > w || c < -w)
                throw WindowExceededError(std::string(where) + ": support point " + point_str(e.first) +
                                          " outside window " + std::to_string(w));
}

WreathElement wreath_identity(int k) {
    WreathElement e;
    e.z.assign((size_t)k, 0);
    return e;
}

WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& x, const WreathElement& y) {
    if (x.z.size() != y.z.size()) throw GroupMismatchError("rank mismatch");
    WreathElement out;
    out.sigma = sigma_mul(g, x.sigma, sigma_shift(y.sigma, x.z));
    out.z = point_add(x.z, y.z);
    return out;
}

WreathElement wreath_inverse(const FiniteGroup& g, const WreathElement& x) {
    WreathElement out;
    out.z = point_neg(x.z);
    out.sigma = sigma_shift(sigma_inv(g, x.sigma), out.z);
    return out;
}

Point WreathAutomorphism::apply_d(const Point& p) const {
    Point out((size_t)k, 0);
    for (int i = 0; i < k; ++i) {
        long long acc = 0;
        for (int j = 0; j < k; ++j) acc += d_rows[(size_t)i][(size_t)j] * p[(size_t)j];
        out[(size_t)i] = acc;
    }
    return out;
}

namespace {

// d-orbit of m: minimal period, all intermediate points (distinct by minimality)
std::vector<Point> d_orbit(const WreathAutomorphism& phi, const Point& m, int cap) {
    std::vector<Point> orbit{m};
    Point p = phi.apply_d(m);
    while (p != m) {
        orbit.push_back(p);
        p = phi.apply_d(p);
        if ((int)orbit.size() > cap) throw OrbitNotMaximalError("orbit of " + point_str(m) + " does not close");
    }
    return orbit;
}

std::vector<Point> window_box(int k, long long w) {
    std::vector<Point> pts;
    Point cur((size_t)k, -w);
    while (true) {
        pts.push_back(cur);
        int i = 0;
        while (i < k && ++cur[(size_t)i] > w) cur[(size_t)i++] = -w;
        if (i == k) break;
    }
    return pts;
}

} // namespace

SigmaElement expand_b(const WreathAutomorphism& phi, const Point& z) {
    bool all_empty = true;
    for (const auto& bg : phi.b_gens)
        if (!bg.empty()) all_empty = false;
    SigmaElement out;
    if (all_empty) return out;
    const FiniteGroup& g = *phi.group;
    // left-to-right over coordinates with b(m+m') = b(m) . shift(d m)(b(m'))
    Point acc((size_t)phi.k, 0);
    for (int i = 0; i < phi.k; ++i) {
        long long zi = z[(size_t)i];
        if (zi == 0) continue;
        Point ei((size_t)phi.k, 0);
        ei[(size_t)i] = 1;
        SigmaElement bpart; // b(zi * e_i)
        if (zi > 0) {
            Point step((size_t)phi.k, 0);
            for (long long t = 0; t < zi; ++t) {
                bpart = sigma_mul(g, bpart, sigma_shift(phi.b_gens[(size_t)i], phi.apply_d(step)));
                step = point_add(step, ei);
            }
        } else {
            Point upos = ei;
            SigmaElement bu;
            Point step((size_t)phi.k, 0);
            for (long long t = 0; t < -zi; ++t) {
                bu = sigma_mul(g, bu, sigma_shift(phi.b_gens[(size_t)i], phi.apply_d(step)));
                step = point_add(step, ei);
            }
            // b(-u) = shift(-d u)(b(u)^-1)
            Point du = phi.apply_d(step);
            bpart = sigma_shift(sigma_inv(g, bu), point_neg(du));
        }
        out = sigma_mul(g, out, sigma_shift(bpart, phi.apply_d(acc)));
        Point ziv((size_t)phi.k, 0);
        ziv[(size_t)i] = zi;
        acc = point_add(acc, ziv);
    }
    require_window(out, phi.window, "cocycle expansion");
    return out;
}

SigmaElement apply_sigma_automorphism(const WreathAutomorphism& phi, const SigmaElement& s) {
    const FiniteGroup& g = *phi.group;
    require_window(s, phi.window, "automorphism input");
    SigmaElement out;
    for (const auto& [p, v] : s.entries) {
        SigmaElement img = sigma_shift(phi.a0[(size_t)v], phi.apply_d(p));
        require_window(img, phi.window, "automorphism image");
        SigmaElement bp = expand_b(phi, p);
        if (!bp.empty()) img = sigma_conj(g, bp, img);
        out = sigma_mul(g, out, img);
    }
    require_window(out, phi.window, "automorphism output");
    return out;
}

WreathElement apply_automorphism(const WreathAutomorphism& phi, const WreathElement& x) {
    if ((int)x.z.size() != phi.k) throw GroupMismatchError("rank mismatch");
    WreathElement out;
    out.sigma = sigma_mul(*phi.group, apply_sigma_automorphism(phi, x.sigma), expand_b(phi, x.z));
    out.z = phi.apply_d(x.z);
    return out;
}

WreathAutomorphism make_wreath_automorphism(GroupPtr group, int k, const IntMatrix& d,
                                            std::vector<SigmaElement> b_gens,
                                            std::vector<SigmaElement> a0, long long window,
                                            long long budget, long long check_window) {
    if (!group) throw ParseError("missing base group");
    if (k <= 0 || d.k != k) throw ParseError("rank/matrix size mismatch");
    const FiniteGroup& g = *group;
    WreathAutomorphism phi;
    phi.group = group;
    phi.k = k;
    phi.d = d;
    phi.window = window;
    phi.budget = budget;

    auto ord = matrix_order(d, 64); // throws NotUnimodular when |det| != 1
    phi.cert.unimodular = true;
    if (!ord) throw NotFiniteOrderError("matrix has no order up to 64");
    phi.cert.d_order = *ord;
    phi.d_inv = unimodular_inverse(d);
    phi.d_rows = d.to_rows();

    if (b_gens.empty()) b_gens.resize(k); // trivial cocycle
    if ((int)b_gens.size() != k) throw ParseError("need one cocycle value per basis vector");
    phi.b_gens.reserve(b_gens.size());
    for (auto& bg : b_gens) {
        SigmaElement c = sigma_canonical(g, std::move(bg.entries));
        require_window(c, window, "cocycle generator");
        phi.b_gens.push_back(std::move(c));
    }
    if ((int)a0.size() != g.n) throw ParseError("base map must list an image for every element");
    phi.a0.reserve(a0.size());
    for (auto& s : a0) {
        SigmaElement c = sigma_canonical(g, std::move(s.entries));
        require_window(c, window, "base map image");
        phi.a0.push_back(std::move(c));
    }

    // cocycle consistency on generator pairs
    phi.cert.cocycle_consistent = true;
    for (int i = 0; i < k && phi.cert.cocycle_consistent; ++i)
        for (int j = i + 1; j < k && phi.cert.cocycle_consistent; ++j) {
            Point ei((size_t)k, 0), ej((size_t)k, 0);
            ei[(size_t)i] = 1;
            ej[(size_t)j] = 1;
            SigmaElement lhs = sigma_mul(g, phi.b_gens[(size_t)i],
                                         sigma_shift(phi.b_gens[(size_t)j], phi.apply_d(ei)));
            SigmaElement rhs = sigma_mul(g, phi.b_gens[(size_t)j],
                                         sigma_shift(phi.b_gens[(size_t)i], phi.apply_d(ej)));
            if (!(lhs == rhs)) phi.cert.cocycle_consistent = false;
        }
    if (!phi.cert.cocycle_consistent)
        throw ParseError("cocycle generators are inconsistent");

    // a0 is an injective homomorphism into the direct sum
    if (!phi.a0[(size_t)g.identity].empty()) throw ParseError("base map must send identity to identity");
    for (int x = 0; x < g.n; ++x)
        if (x != g.identity && phi.a0[(size_t)x].empty())
            throw ParseError("base map kills a non-identity element");
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (!(sigma_mul(g, phi.a0[(size_t)x], phi.a0[(size_t)y]) == phi.a0[(size_t)g.mul(x, y)]))
                throw ParseError("base map is not a homomorphism");
    phi.cert.a0_injective_hom = true;

    // images of distinct coordinates must commute
    long long cw = check_window >= 0 ? check_window : std::min<long long>(window, 3);
    phi.cert.check_window = cw;
    std::vector<int> gens = small_generating_set(g);
    if (gens.empty()) gens.push_back(g.identity);
    auto image_of = [&](const Point& p, int v) {
        SigmaElement img = sigma_shift(phi.a0[(size_t)v], phi.apply_d(p));
        SigmaElement bp = expand_b(phi, p);
        if (!bp.empty()) img = sigma_conj(g, bp, img);
        return img;
    };
    std::vector<Point> box = window_box(k, cw);
    phi.cert.images_commute = true;
    for (size_t pi = 0; pi < box.size() && phi.cert.images_commute; ++pi)
        for (size_t qi = pi + 1; qi < box.size() && phi.cert.images_commute; ++qi)
            for (int gv : gens)
                for (int hv : gens) {
                    SigmaElement a = image_of(box[pi], gv);
                    SigmaElement b = image_of(box[qi], hv);
                    if (!(sigma_mul(g, a, b) == sigma_mul(g, b, a))) {
                        phi.cert.images_commute = false;
                        break;
                    }
                }
    if (!phi.cert.images_commute)
        throw ParseError("images of distinct coordinates do not commute");

    // windowed order evidence: minimal power restoring every checkable
    // generator delta_m^g, compared against the order of d
    int s = phi.cert.d_order;
    int cap = std::max(8 * s + 8, 16);
    long long order_lcm = 1;
    bool all_found = true;
    for (const Point& m : window_box(k, window)) {
        bool orbit_inside = true;
        Point p = m;
        for (int t = 0; t < s && orbit_inside; ++t) {
            for (long long c : p)
                if (c > window || c < -window) orbit_inside = false;
            p = phi.apply_d(p);
        }
        if (!orbit_inside) continue;
        for (int gv : gens) {
            if (gv == g.identity) continue;
            SigmaElement start = sigma_delta(g, m, gv);
            SigmaElement cur = start;
            int period = 0;
            for (int t = 1; t <= cap; ++t) {
                cur = apply_sigma_automorphism(phi, cur);
                if (cur == start) {
                    period = t;
                    break;
                }
            }
            if (period == 0)
                all_found = false;
            else
                order_lcm = std::lcm(order_lcm, (long long)period);
        }
    }
    phi.cert.base_order_on_window = all_found ? order_lcm : 0;
    phi.cert.order_matches_base = all_found && order_lcm == s;
    return phi;
}

IterationReport iterate_formula_check(const WreathAutomorphism& phi, const Point& m, int h, int q) {
    if (q < 1) throw ParseError("iteration count must be >= 1");
    const FiniteGroup& g = *phi.group;
    IterationReport rep;
    rep.m = m;
    rep.h = h;
    rep.q = q;

    SigmaElement start = sigma_delta(g, m, h);
    SigmaElement iter = start;
    for (int t = 0; t < q; ++t) iter = apply_sigma_automorphism(phi, iter);
    rep.iterated = iter;

    SigmaElement beta;
    Point mj = m;
    for (int j = 0; j < q; ++j) {
        beta = sigma_mul(g, apply_sigma_automorphism(phi, beta), expand_b(phi, mj));
        mj = phi.apply_d(mj);
    }
    rep.beta = beta;

    SigmaElement base = sigma_delta(g, Point((size_t)phi.k, 0), h);
    for (int t = 0; t < q; ++t) base = apply_sigma_automorphism(phi, base);
    Point dqm = m;
    for (int t = 0; t < q; ++t) dqm = phi.apply_d(dqm);
    SigmaElement shifted = sigma_shift(base, dqm);
    rep.closed_form = sigma_conj(g, beta, shifted);

    rep.equal = (rep.iterated == rep.closed_form);
    rep.supports_equal = (rep.closed_form.support() == shifted.support());
    return rep;
}

namespace {

struct LightClosure {
    std::vector<SigmaElement> gens;     // the orbit of the seed under the map
    std::vector<SigmaElement> elements; // sorted
};

LightClosure orbit_closure(const FiniteGroup& g,
                           const std::function<SigmaElement(const SigmaElement&)>& psi,
                           const std::vector<SigmaElement>& seeds, long long budget) {
    LightClosure lc;
    std::set<SigmaElement> genset;
    for (const auto& seed : seeds) {
        if (seed.empty()) continue;
        if (genset.count(seed)) continue;
        SigmaElement cur = seed;
        int guard = 0;
        do {
            genset.insert(cur);
            cur = psi(cur);
            if (++guard > 4096) throw BudgetExceededError("orbit of a seed did not close");
        } while (!(cur == seed));
    }
    lc.gens.assign(genset.begin(), genset.end());

    std::set<SigmaElement> elems;
    std::vector<SigmaElement> queue;
    SigmaElement e;
    elems.insert(e);
    queue.push_back(e);
    while (!queue.empty()) {
        SigmaElement x = std::move(queue.back());
        queue.pop_back();
        for (const auto& gen : lc.gens) {
            SigmaElement y = sigma_mul(g, gen, x);
            if (elems.insert(y).second) {
                if ((long long)elems.size() > budget)
                    throw BudgetExceededError("closure exceeded the element budget");
                queue.push_back(y);
            }
        }
    }
    lc.elements.assign(elems.begin(), elems.end());
    return lc;
}

ClosureResult closure_as_group(const WreathAutomorphism& phi,
                               const std::function<SigmaElement(const SigmaElement&)>& psi,
                               const std::vector<SigmaElement>& seeds) {
    const FiniteGroup& g = *phi.group;
    LightClosure lc = orbit_closure(g, psi, seeds, phi.budget);
    size_t n = lc.elements.size();
    if (n > 4096) throw BudgetExceededError("closure too large for an explicit table");
    std::map<SigmaElement, int> index;
    for (size_t i = 0; i < n; ++i) index.emplace(lc.elements[i], (int)i);

    std::vector<int> table(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SigmaElement p = sigma_mul(g, lc.elements[i], lc.elements[j]);
            auto it = index.find(p);
            if (it == index.end()) throw ComputationFailedError("closure is not closed under product");
            table[i * n + j] = it->second;
        }
    BuildOptions opts;
    opts.name = "sigma-closure";
    ClosureResult out;
    out.group = build_group_flat((int)n, table, opts);
    out.elements = lc.elements;

    std::vector<int> image(n);
    for (size_t i = 0; i < n; ++i) {
        SigmaElement y = psi(lc.elements[i]);
        auto it = index.find(y);
        if (it == index.end()) throw ComputationFailedError("closure is not invariant under the map");
        image[(size_t)i] = it->second;
    }
    out.induced = make_automorphism(out.group, image);
    return out;
}

} // namespace

ClosureResult sigma_closure(const WreathAutomorphism& phi, const SigmaElement& seed) {
    return sigma_closure_seeds(phi, {seed});
}

ClosureResult sigma_closure_seeds(const WreathAutomorphism& phi,
                                  const std::vector<SigmaElement>& seeds) {
    auto psi = [&phi](const SigmaElement& s) { return apply_sigma_automorphism(phi, s); };
    return closure_as_group(phi, psi, seeds);
}

ClosureResult sigma_closure_g0(const WreathAutomorphism& phi) {
    const FiniteGroup& g = *phi.group;
    std::vector<SigmaElement> seeds;
    Point origin((size_t)phi.k, 0);
    for (int v : small_generating_set(g)) seeds.push_back(sigma_delta(g, origin, v));
    return sigma_closure_seeds(phi, seeds);
}

namespace {

WitnessBatch witness_impl(const WreathAutomorphism& phi, const SigmaElement& sigma0, const Point& m,
                          int count, const Point& z_offset) {
    const FiniteGroup& g = *phi.group;
    auto psi = [&](const SigmaElement& s) {
        return sigma_shift(apply_sigma_automorphism(phi, s), z_offset);
    };
    if (sigma0.empty()) throw NotFixedError("seed element is empty");
    if (!(psi(sigma0) == sigma0)) throw NotFixedError("seed element is not fixed");
    bool zero = std::all_of(m.begin(), m.end(), [](long long c) { return c == 0; });
    if (zero) throw OrbitNotMaximalError("direction vector is zero");
    std::vector<Point> orbit = d_orbit(phi, m, 4 * phi.cert.d_order + 4);
    int s = (int)orbit.size();
    if (s != phi.cert.d_order)
        throw OrbitNotMaximalError("orbit length " + std::to_string(s) + " != order " +
                                   std::to_string(phi.cert.d_order));

    WitnessBatch batch;
    batch.diameter = sigma_diameter(sigma0);
    batch.orbit_length = s;
    std::set<Point> used;
    long long n = 1;
    for (int t = 0; t < count; ++t) {
        if (t > 0) n = 2 * batch.multipliers.back();
        bool accepted = false;
        long long attempts = 0;
        while (!accepted) {
            if (++attempts > 200000) throw ComputationFailedError("no multiplier produced a witness");
            // orbit points of n*m, pairwise separation > 2 diam
            std::vector<Point> pts;
            pts.reserve((size_t)s);
            for (const Point& o : orbit) {
                Point q(o.size());
                for (size_t i = 0; i < o.size(); ++i) q[i] = n * o[i];
                pts.push_back(std::move(q));
            }
            bool sep = true;
            for (int i = 0; i < s && sep; ++i)
                for (int j = i + 1; j < s && sep; ++j)
                    if (linf_dist(pts[(size_t)i], pts[(size_t)j]) <= 2 * batch.diameter) sep = false;
            if (!sep) {
                ++n;
                continue;
            }
            SigmaElement seed = sigma_shift(sigma0, pts[0]);
            SigmaElement cur = seed;
            SigmaElement prod = seed;
            for (int j = 1; j < s; ++j) {
                cur = psi(cur);
                prod = sigma_mul(g, prod, cur);
            }
            if (!(psi(cur) == seed) || !(psi(prod) == prod)) {
                ++n;
                continue;
            }
            bool disjoint = true;
            for (const auto& e : prod.entries)
                if (used.count(e.first)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint || prod.empty()) {
                ++n;
                continue;
            }
            for (const auto& e : prod.entries) used.insert(e.first);
            batch.witnesses.push_back(std::move(prod));
            batch.multipliers.push_back(n);
            accepted = true;
        }
    }
    return batch;
}

} // namespace

WitnessBatch fixed_witness_generator(const WreathAutomorphism& phi, const SigmaElement& sigma0,
                                     const Point& m, int count) {
    return witness_impl(phi, sigma0, m, count, Point((size_t)phi.k, 0));
}

WitnessBatch fixed_witness_generator_twisted(const WreathAutomorphism& phi,
                                             const SigmaElement& sigma0, const Point& m, int count,
                                             const Point& z_offset) {
    return witness_impl(phi, sigma0, m, count, z_offset);
}

std::vector<SigmaElement> default_probe_seeds(const WreathAutomorphism& phi, long long box,
                                              int limit, bool* truncated) {
    const FiniteGroup& g = *phi.group;
    std::vector<SigmaElement> singles;
    for (const Point& p : window_box(phi.k, box))
        for (int v = 0; v < g.n; ++v)
            if (v != g.identity) singles.push_back(sigma_delta(g, p, v));
    std::set<SigmaElement> seen;
    std::vector<SigmaElement> out;
    bool trunc = false;
    auto push = [&](SigmaElement s) {
        if (s.empty()) return;
        if ((int)out.size() >= limit) {
            trunc = true;
            return;
        }
        if (seen.insert(s).second) out.push_back(std::move(s));
    };
    for (const auto& s : singles) push(s);
    for (size_t i = 0; i < singles.size() && !trunc; ++i)
        for (size_t j = i + 1; j < singles.size() && !trunc; ++j)
            push(sigma_mul(g, singles[i], singles[j]));
    if (truncated) *truncated = trunc;
    return out;
}

namespace {

std::optional<Point> maximal_orbit_vector(const WreathAutomorphism& phi) {
    int s = phi.cert.d_order;
    for (const Point& m : window_box(phi.k, 2)) {
        if (std::all_of(m.begin(), m.end(), [](long long c) { return c == 0; })) continue;
        Point p = phi.apply_d(m);
        int period = 1;
        bool closed = true;
        while (!(p == m)) {
            p = phi.apply_d(p);
            if (++period > s) {
                closed = false;
                break;
            }
        }
        if (closed && period == s) return m;
    }
    return std::nullopt;
}

} // namespace

std::vector<BigInt> SeparationReport::predicate_class(const WreathElement& x) const {
    if (!rbar_finite || !all_one)
        throw ComputationFailedError("separating predicate is only defined when every class has single-class evidence");
    std::vector<BigInt> zb(x.z.begin(), x.z.end());
    return quotient.project(zb);
}

bool SeparationReport::same_class(const WreathElement& x, const WreathElement& y) const {
    return predicate_class(x) == predicate_class(y);
}

SeparationReport separation_pipeline(const WreathAutomorphism& phi, int witness_count,
                                     int probe_limit) {
    const FiniteGroup& g = *phi.group;
    SeparationReport rep;
    rep.probe_limit = probe_limit;

    ZkClassData zk = reidemeister_zk(phi.d);
    if (!zk.finite) return rep; // infinitely many classes upstairs; nothing more to separate
    rep.rbar_finite = true;
    rep.rbar_count = zk.count;
    rep.quotient = *zk.quotient;
    if (zk.count > 4096) throw BudgetExceededError("coordinate quotient too large to enumerate");

    std::vector<SigmaElement> seeds = default_probe_seeds(phi, 2, probe_limit, &rep.probes_truncated);

    // enumerate residue tuples of the quotient lexicographically
    size_t nf = rep.quotient.factors.size();
    std::vector<BigInt> residue(nf, 0);
    bool done = false;
    while (!done) {
        ZClassEvidence ev;
        std::vector<BigInt> zlift = rep.quotient.lift(residue);
        ev.z.resize((size_t)phi.k);
        for (int i = 0; i < phi.k; ++i) ev.z[(size_t)i] = zlift[(size_t)i].convert_to<long long>();

        auto psi = [&](const SigmaElement& s) {
            return sigma_shift(apply_sigma_automorphism(phi, s), ev.z);
        };
        SigmaElement found;
        for (const auto& seed : seeds) {
            ProbeEvidence pe;
            pe.seed = seed;
            LightClosure lc = orbit_closure(g, psi, {seed}, phi.budget);
            pe.closure_size = (long long)lc.elements.size();
            for (const auto& x : lc.elements)
                if (!x.empty() && psi(x) == x) {
                    pe.fixed_element = x;
                    break;
                }
            if (!pe.fixed_element.empty()) {
                pe.identity_class_is_whole = false;
                ev.infinite = true;
                found = pe.fixed_element;
                ev.probes.push_back(std::move(pe));
                break;
            }
            // twisted orbit of the identity under x -> a x psi(a)^-1
            std::set<SigmaElement> orbit;
            std::vector<SigmaElement> queue;
            SigmaElement e;
            orbit.insert(e);
            queue.push_back(e);
            while (!queue.empty()) {
                SigmaElement x = std::move(queue.back());
                queue.pop_back();
                for (const auto& a : lc.gens) {
                    SigmaElement y = sigma_mul(g, sigma_mul(g, a, x), sigma_inv(g, psi(a)));
                    if (orbit.insert(y).second) queue.push_back(y);
                }
            }
            pe.identity_class_is_whole = (orbit.size() == lc.elements.size());
            if (!pe.identity_class_is_whole)
                throw ComputationFailedError("identity class is partial yet no fixed element exists");
            ev.probes.push_back(std::move(pe));
        }
        if (ev.infinite) {
            auto m = maximal_orbit_vector(phi);
            if (m) ev.witnesses = fixed_witness_generator_twisted(phi, found, *m, witness_count, ev.z);
        }
        rep.per_class.push_back(std::move(ev));

        if (nf == 0) break;
        size_t pos = 0;
        while (pos < nf) {
            residue[pos] += 1;
            if (residue[pos] < rep.quotient.factors[pos]) break;
            residue[pos] = 0;
            ++pos;
        }
        done = (pos == nf);
    }
    rep.all_one = std::none_of(rep.per_class.begin(), rep.per_class.end(),
                               [](const ZClassEvidence& e) { return e.infinite; });
    return rep;
}

} // namespace twc
