#include "twisted.hpp"

#include <algorithm>
#include <set>

namespace twc {

std::vector<std::vector<int>> ReidemeisterPartition::classes() const {
    std::vector<std::vector<int>> out(count);
    for (int x = 0; x < (int)class_of.size(); ++x) out[class_of[x]].push_back(x);
    return out;
}

ReidemeisterPartition twisted_classes(const Automorphism& phi) {
    const auto& g = *phi.group;
    ReidemeisterPartition p;
    p.group = phi.group;
    p.class_of.assign(g.n, -1);
    // The twisted action of the whole group is transitive on each class, so
    // one sweep {a x phi(a)^-1 : a in G} collects the class of x completely.
    for (int x = 0; x < g.n; ++x) {
        if (p.class_of[x] >= 0) continue;
        int id = p.count++;
        p.representatives.push_back(x);
        for (int a = 0; a < g.n; ++a) {
            int y = g.mul(g.mul(a, x), g.inv(phi(a)));
            p.class_of[y] = id;
        }
    }
    return p;
}

Subgroup fixed_subgroup(const Automorphism& phi) {
    std::vector<int> fixed;
    for (int x = 0; x < phi.group->n; ++x)
        if (phi(x) == x) fixed.push_back(x);
    return make_subgroup(phi.group, std::move(fixed));
}

Subgroup twisted_stabilizer(const Automorphism& phi, int x) {
    const auto& g = *phi.group;
    if (x < 0 || x >= g.n) throw GroupMismatchError("element out of range");
    std::vector<int> stab;
    for (int a = 0; a < g.n; ++a)
        if (g.mul(g.mul(a, x), g.inv(phi(a))) == x) stab.push_back(a);
    return make_subgroup(phi.group, std::move(stab));
}

ShiftClassMap shift_class_map(const Automorphism& phi, int x) {
    const auto& g = *phi.group;
    if (x < 0 || x >= g.n) throw GroupMismatchError("element out of range");
    int xi = g.inv(x);
    std::vector<int> image(g.n);
    for (int a = 0; a < g.n; ++a) image[a] = g.mul(g.mul(xi, phi(a)), x);

    ShiftClassMap out;
    out.shifted = make_automorphism(phi.group, std::move(image));
    out.phi_classes = twisted_classes(phi);
    out.psi_classes = twisted_classes(out.shifted);
    if (out.phi_classes.count != out.psi_classes.count)
        throw ComputationFailedError("shifted automorphism changed the class count");

    // {a}_phi -> {a x}_psi must be a well-defined bijection on classes.
    out.class_bijection.assign(out.phi_classes.count, -1);
    for (int a = 0; a < g.n; ++a) {
        int from = out.phi_classes.class_of[a];
        int to = out.psi_classes.class_of[g.mul(a, x)];
        if (out.class_bijection[from] < 0)
            out.class_bijection[from] = to;
        else if (out.class_bijection[from] != to)
            throw ComputationFailedError("translation by x does not map classes to classes");
    }
    std::vector<char> hit(out.phi_classes.count, 0);
    for (int t : out.class_bijection) {
        if (t < 0 || hit[t]) throw ComputationFailedError("translation class map is not a bijection");
        hit[t] = 1;
    }
    return out;
}

ExtensionReport extension_sum_check(const Automorphism& phi, const Subgroup& h) {
    GroupPtr gamma = phi.group;
    if (h.parent.get() != gamma.get()) throw GroupMismatchError("subgroup of a different group");
    if (!is_normal(h)) throw NotNormalError("extension check needs H normal in Gamma");
    for (int m : h.members)
        if (!h.contains(phi(m))) throw NotInvariantError("phi does not preserve H");

    Quotient q = quotient_group(gamma, h);
    const auto& qg = *q.group;

    // Induced automorphism on the quotient.
    std::vector<int> qimage(qg.n);
    for (int i = 0; i < qg.n; ++i) qimage[i] = q.projection[phi(q.coset_rep[i])];
    Automorphism phi_bar = make_automorphism(q.group, std::move(qimage));

    // Restriction to H in subgroup coordinates.
    std::vector<int> rimage(h.size());
    for (int i = 0; i < h.size(); ++i) rimage[i] = h.parent_to_sub[phi(h.members[i])];
    Automorphism phi_res = make_automorphism(h.as_group, std::move(rimage));

    ExtensionReport rep;
    ReidemeisterPartition part_gamma = twisted_classes(phi);
    ReidemeisterPartition part_q = twisted_classes(phi_bar);
    rep.r_phi = part_gamma.count;
    rep.r_quotient = part_q.count;
    rep.r_restriction = twisted_classes(phi_res).count;

    Subgroup qfix = fixed_subgroup(phi_bar);
    rep.quotient_fixed_order = qfix.size();
    rep.quotient_fixed_trivial = qfix.is_trivial();

    // Projection sends each phi-class onto a whole phi_bar-class.
    rep.projection_maps_classes_onto_classes = true;
    auto gamma_classes = part_gamma.classes();
    std::vector<char> q_class_covered(part_q.count, 0);
    for (const auto& cls : gamma_classes) {
        std::set<int> proj;
        for (int x : cls) proj.insert(q.projection[x]);
        int qid = part_q.class_of[*proj.begin()];
        std::set<int> target;
        for (int y = 0; y < qg.n; ++y)
            if (part_q.class_of[y] == qid) target.insert(y);
        if (proj != target) rep.projection_maps_classes_onto_classes = false;
        q_class_covered[qid] = 1;
    }
    for (char c : q_class_covered)
        if (!c) rep.projection_maps_classes_onto_classes = false;

    if (rep.quotient_fixed_trivial) {
        // Classes of the restriction are exactly (class of phi) intersect H.
        ReidemeisterPartition part_res = twisted_classes(phi_res);
        rep.restriction_classes_are_intersections = true;
        std::vector<char> res_class_seen(part_res.count, 0);
        for (const auto& cls : gamma_classes) {
            std::set<int> inter;
            for (int x : cls)
                if (h.contains(x)) inter.insert(h.parent_to_sub[x]);
            if (inter.empty()) continue;
            int rid = part_res.class_of[*inter.begin()];
            std::set<int> target;
            for (int y = 0; y < h.size(); ++y)
                if (part_res.class_of[y] == rid) target.insert(y);
            if (inter != target || res_class_seen[rid]) rep.restriction_classes_are_intersections = false;
            res_class_seen[rid] = 1;
        }
        for (char c : res_class_seen)
            if (!c) rep.restriction_classes_are_intersections = false;

        // R(phi) = sum over quotient class representatives g_j of
        // R(tau_{g_j} . phi|_H).
        int sum = 0;
        for (int qrep : part_q.representatives) {
            int gj = q.coset_rep[qrep]; // lift: minimal element of the coset
            rep.lifted_reps.push_back(gj);
            std::vector<int> timage(h.size());
            for (int i = 0; i < h.size(); ++i) {
                int y = gamma->conj(gj, phi(h.members[i]));
                if (!h.contains(y)) throw ComputationFailedError("tau_g phi does not preserve H");
                timage[i] = h.parent_to_sub[y];
            }
            Automorphism tw = make_automorphism(h.as_group, std::move(timage));
            int r = twisted_classes(tw).count;
            rep.summands.push_back(r);
            sum += r;
        }
        rep.sum_formula_holds = (sum == rep.r_phi);
    } else {
        rep.count_bound_holds =
            rep.r_restriction <= rep.r_phi * rep.quotient_fixed_order;
    }
    return rep;
}

} // namespace twc
