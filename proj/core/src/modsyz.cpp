#include "oideal/modsyz.hpp"

#include <algorithm>
#include <cmath>

namespace oideal {

Presentation free_presentation(RingPtr ring, FreeModule F) {
    return Presentation{GradedMap::zero(std::move(ring), std::move(F), FreeModule{})};
}

Presentation cyclic_presentation(const Ideal& I) {
    FreeModule target{{0}};
    std::vector<VecP> cols;
    for (const auto& g : I.gens()) cols.push_back(VecP{g});
    return Presentation{GradedMap::from_columns(I.ring(), target, cols)};
}

namespace {

int vec_module_degree(const VecP& v, const std::vector<int>& twists) {
    for (size_t r = 0; r < v.size(); ++r)
        if (!v[r].is_zero()) return v[r].degree() + twists[r];
    return 0;
}

}  // namespace

GradedMap syzygies(const GradedMap& M, bool minimalize, const GBLimits& lim,
                   ReduceStrategy strategy) {
    const RingPtr& ring = M.ring();
    ModuleGB gb = ModuleGB::compute(ring, M.rows(), M.columns(), true, lim);
    std::vector<VecP> syz = gb.syzygies(strategy);

    const std::vector<int>& twists = M.source().twists;
    std::vector<int> degs;
    degs.reserve(syz.size());
    for (const auto& s : syz) degs.push_back(vec_module_degree(s, twists));

    std::vector<VecP> cols;
    if (minimalize) {
        for (int idx : minimal_generating_subset(ring, M.cols(), syz, degs, lim))
            cols.push_back(syz[idx]);
    } else {
        std::vector<int> order(syz.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degs[a] < degs[b]; });
        for (int idx : order)
            if (!vec_is_zero(syz[idx])) cols.push_back(syz[idx]);
    }

    GradedMap out = GradedMap::from_columns(ring, M.source(), cols);
    if (!M.compose(out).is_zero()) throw Error("internal: syzygy postcondition M o S = 0 failed");
    return out;
}

GradedMap kernel_of_map(const GradedMap& M, const GBLimits& lim) { return syzygies(M, true, lim); }

std::optional<VecP> lift_through(const GradedMap& M, const VecP& v, ReduceStrategy strategy,
                                 const GBLimits& lim) {
    if (static_cast<int>(v.size()) != M.rows())
        throw InvalidInputError("lift_through: vector rank mismatch");
    ModuleGB gb = ModuleGB::compute(M.ring(), M.rows(), M.columns(), true, lim);
    VecP trace = vec_zero(M.ring(), M.cols());
    VecP rem = gb.normal_form(v, strategy, &trace);
    if (!vec_is_zero(rem)) return std::nullopt;
    VecP w = vec_neg(trace);
    if (!vec_equal(M.apply(w), v)) throw Error("internal: lift_through postcondition failed");
    return w;
}

Presentation minimal_generators(const Presentation& P) {
    const RingPtr& ring = P.ring();
    std::vector<std::vector<Poly>> a = P.relations.entries();
    std::vector<int> gtw = P.relations.target().twists;
    std::vector<int> dtw = P.relations.source().twists;

    while (true) {
        int pr = -1, pc = -1;
        for (int r = 0; r < static_cast<int>(a.size()) && pr < 0; ++r)
            for (int c = 0; c < static_cast<int>(dtw.size()); ++c)
                if (a[r][c].is_unit()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        const Field& k = ring->field;
        mpq_class uinv = k.inv(a[pr][pc].leading_coeff());
        std::vector<std::vector<Poly>> nb;
        for (int r = 0; r < static_cast<int>(a.size()); ++r) {
            if (r == pr) continue;
            std::vector<Poly> row;
            for (int c = 0; c < static_cast<int>(dtw.size()); ++c) {
                if (c == pc) continue;
                row.push_back(a[r][c].sub(a[r][pc].mul(a[pr][c]).scale(uinv)));
            }
            nb.push_back(std::move(row));
        }
        a = std::move(nb);
        gtw.erase(gtw.begin() + pr);
        dtw.erase(dtw.begin() + pc);
    }

    // drop zero relation columns
    std::vector<int> keep;
    for (int c = 0; c < static_cast<int>(dtw.size()); ++c) {
        bool nonzero = false;
        for (const auto& row : a)
            if (!row[c].is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) keep.push_back(c);
    }
    std::vector<int> ndtw;
    std::vector<std::vector<Poly>> ne(a.size());
    for (size_t r = 0; r < a.size(); ++r)
        for (int c : keep) ne[r].push_back(a[r][c]);
    for (int c : keep) ndtw.push_back(dtw[c]);

    return Presentation{GradedMap(ring, FreeModule{gtw}, FreeModule{ndtw}, std::move(ne))};
}

int nu(const Presentation& P) { return minimal_generators(P).ngens(); }

Ideal annihilator(const Presentation& P, const GBLimits& lim) {
    const RingPtr& ring = P.ring();
    int g = P.ngens();
    if (g == 0) return Ideal(ring, {Poly::constant(ring, 1)});  // ann(0) = R
    std::vector<VecP> relcols = P.relations.columns();
    bool first = true;
    Ideal acc(ring, {});
    for (int r = 0; r < g; ++r) {
        // { f : f*e_r in im(relations) } from first coordinates of syzygies
        // of [e_r | relations]
        std::vector<VecP> cols;
        VecP er = vec_zero(ring, g);
        er[r] = Poly::constant(ring, 1);
        cols.push_back(std::move(er));
        for (const auto& col : relcols) cols.push_back(col);
        ModuleGB gb = ModuleGB::compute(ring, g, cols, true, lim);
        std::vector<Poly> gens;
        for (const auto& s : gb.syzygies())
            if (!s[0].is_zero()) gens.push_back(s[0]);
        Ideal part(ring, std::move(gens));
        acc = first ? part : intersect(acc, part, lim);
        first = false;
    }
    return acc;
}

long presentation_hf(const Presentation& P, int t, const GBLimits& lim) {
    const RingPtr& ring = P.ring();
    int n = ring->nvars();
    long ambient = P.relations.target().piece_dim(n, t);
    if (ambient == 0) return 0;
    ModuleGB gb = ModuleGB::compute(ring, P.ngens(), P.relations.columns(), false, lim);
    const std::vector<int>& gtw = P.relations.target().twists;
    long image = 0;
    // count module monomials of degree t inside the lead-term submodule
    std::vector<std::pair<int, Monomial>> leads;
    for (const auto& b : gb.basis()) {
        auto lt = vec_leading_term(b);
        leads.emplace_back(lt->comp, lt->mono);
    }
    for (int r = 0; r < P.ngens(); ++r) {
        int d = t - gtw[r];
        if (d < 0) continue;
        for (const auto& m : monomials_of_degree(n, d)) {
            for (const auto& [comp, lead] : leads) {
                if (comp == r && lead.divides(m)) {
                    ++image;
                    break;
                }
            }
        }
    }
    return ambient - image;
}

Presentation twist_presentation(const Presentation& P, int shift) {
    FreeModule nt, ns;
    for (int tw : P.relations.target().twists) nt.twists.push_back(tw - shift);
    for (int tw : P.relations.source().twists) ns.twists.push_back(tw - shift);
    return Presentation{GradedMap(P.ring(), std::move(nt), std::move(ns), P.relations.entries())};
}

int hf_bound(const Presentation& P) {
    int m = 0;
    for (int tw : P.relations.target().twists) m = std::max(m, std::abs(tw));
    for (int tw : P.relations.source().twists) m = std::max(m, std::abs(tw));
    return m + 6;
}

std::optional<int> presentation_dim(const Presentation& P, const GBLimits& lim) {
    Ideal ann = annihilator(P, lim);
    if (!is_proper(ann, lim)) return std::nullopt;  // zero module
    return dim_quotient(ann, lim);
}

}  // namespace oideal
