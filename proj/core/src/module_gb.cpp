#include "oideal/module_gb.hpp"

#include <algorithm>
#include <cassert>

namespace oideal {

GBLimits& default_limits() {
    static GBLimits lim;
    return lim;
}

bool vec_is_zero(const VecP& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

VecP vec_zero(const RingPtr& ring, int rank) {
    return VecP(static_cast<size_t>(rank), Poly::zero(ring));
}

VecP vec_add(const VecP& a, const VecP& b) {
    if (a.size() != b.size()) throw InvalidInputError("vector rank mismatch in add");
    VecP out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i].add(b[i]));
    return out;
}

VecP vec_sub(const VecP& a, const VecP& b) {
    if (a.size() != b.size()) throw InvalidInputError("vector rank mismatch in sub");
    VecP out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i].sub(b[i]));
    return out;
}

VecP vec_neg(const VecP& a) {
    VecP out;
    out.reserve(a.size());
    for (const auto& p : a) out.push_back(p.neg());
    return out;
}

VecP vec_mul_term(const VecP& a, const Monomial& m, const mpq_class& c) {
    VecP out;
    out.reserve(a.size());
    for (const auto& p : a) out.push_back(p.mul_term(m, c));
    return out;
}

VecP vec_mul_poly(const VecP& a, const Poly& p) {
    VecP out;
    out.reserve(a.size());
    for (const auto& q : a) out.push_back(q.mul(p));
    return out;
}

VecP vec_scale(const VecP& a, const mpq_class& c) {
    VecP out;
    out.reserve(a.size());
    for (const auto& p : a) out.push_back(p.scale(c));
    return out;
}

bool vec_equal(const VecP& a, const VecP& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::optional<ModTerm> vec_leading_term(const VecP& v) {
    for (size_t c = 0; c < v.size(); ++c) {
        if (!v[c].is_zero()) {
            const Term& t = v[c].leading_term();
            return ModTerm{static_cast<int>(c), t.mono, t.coeff};
        }
    }
    return std::nullopt;
}

namespace {

struct Pair {
    int i, j;  // basis indices, i < j
    int comp;
    Monomial lcm;
};

// normal selection strategy: smallest lcm degree first, deterministic ties
bool pair_less(const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.comp != b.comp) return a.comp < b.comp;
    auto c = grevlex_compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

struct Engine {
    RingPtr ring;
    int rank;
    bool track;
    int ngens = 0;
    GBLimits lim;
    long pairs_seen = 0;

    std::vector<VecP> basis;
    std::vector<VecP> traces;
    std::vector<ModTerm> leads;
    std::vector<Pair> pairs;

    ModTerm lead_of(const VecP& v) const {
        auto lt = vec_leading_term(v);
        assert(lt);
        return *lt;
    }

    void budget(long more) {
        pairs_seen += more;
        if (pairs_seen > lim.pair_cap)
            throw ResourceLimitError("pair cap exceeded (" + std::to_string(lim.pair_cap) + ")");
    }

    // Gebauer-Moller update: install a new basis element, build its pair set
    // with the M/F criteria, apply the product criterion where it is valid
    // (plain ideals only), and prune stale old pairs with the B criterion.
    void add_element(VecP v, VecP tr) {
        int t = static_cast<int>(basis.size());
        ModTerm lt = lead_of(v);

        struct Cand {
            int i;
            Monomial lcm;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i) {
            if (leads[i].comp != lt.comp) continue;
            cands.push_back(Cand{i, leads[i].mono.lcm(lt.mono)});
        }
        budget(static_cast<long>(cands.size()));

        for (size_t a = 0; a < cands.size(); ++a) {
            for (size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !cands[b].keep) continue;
                if (cands[b].lcm == cands[a].lcm) {
                    if (b < a) cands[a].keep = false;  // F: keep one per lcm
                } else if (cands[b].lcm.divides(cands[a].lcm)) {
                    cands[a].keep = false;  // M: strictly smaller lcm exists
                }
                if (!cands[a].keep) break;
            }
        }
        // product criterion is only sound for ideals (rank-1 ambient)
        if (rank == 1) {
            for (auto& c : cands)
                if (c.keep && leads[c.i].mono.coprime(lt.mono)) c.keep = false;
        }

        // B: new lead term retires old pairs it strictly refines
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& p : pairs) {
            bool drop = p.comp == lt.comp && lt.mono.divides(p.lcm) &&
                        leads[p.i].mono.lcm(lt.mono) != p.lcm &&
                        leads[p.j].mono.lcm(lt.mono) != p.lcm;
            if (!drop) kept.push_back(std::move(p));
        }
        pairs = std::move(kept);
        for (auto& c : cands)
            if (c.keep) pairs.push_back(Pair{c.i, t, lt.comp, c.lcm});

        basis.push_back(std::move(v));
        if (track) traces.push_back(std::move(tr));
        leads.push_back(lt);
    }

    int find_reducer(const ModTerm& lt, ReduceStrategy strategy) const {
        int n = static_cast<int>(basis.size());
        if (strategy == ReduceStrategy::prefer_first) {
            for (int k = 0; k < n; ++k)
                if (leads[k].comp == lt.comp && leads[k].mono.divides(lt.mono)) return k;
        } else {
            for (int k = n - 1; k >= 0; --k)
                if (leads[k].comp == lt.comp && leads[k].mono.divides(lt.mono)) return k;
        }
        return -1;
    }

    // full normal form: every term of the result is irreducible
    VecP reduce(VecP work, ReduceStrategy strategy, VecP* trace) const {
        const Field& k = ring->field;
        VecP rem = vec_zero(ring, rank);
        while (true) {
            auto lt = vec_leading_term(work);
            if (!lt) break;
            int r = find_reducer(*lt, strategy);
            if (r >= 0) {
                Monomial m = leads[r].mono.divide_into(lt->mono);
                mpq_class c = k.div(lt->coeff, leads[r].coeff);
                work = vec_sub(work, vec_mul_term(basis[r], m, c));
                if (trace) *trace = vec_sub(*trace, vec_mul_term(traces[r], m, c));
            } else {
                Poly t = Poly::from_term(ring, lt->mono, lt->coeff);
                rem[lt->comp] = rem[lt->comp].add(t);
                work[lt->comp] = work[lt->comp].sub(t);
            }
        }
        return rem;
    }

    void spair(const Pair& p, VecP& v, VecP& tr) const {
        const Field& k = ring->field;
        Monomial ui = leads[p.i].mono.divide_into(p.lcm);
        Monomial uj = leads[p.j].mono.divide_into(p.lcm);
        mpq_class ci = k.inv(leads[p.i].coeff);
        mpq_class cj = k.inv(leads[p.j].coeff);
        v = vec_sub(vec_mul_term(basis[p.i], ui, ci), vec_mul_term(basis[p.j], uj, cj));
        if (track)
            tr = vec_sub(vec_mul_term(traces[p.i], ui, ci), vec_mul_term(traces[p.j], uj, cj));
    }

    void run() {
        while (!pairs.empty()) {
            size_t best = 0;
            for (size_t a = 1; a < pairs.size(); ++a)
                if (pair_less(pairs[a], pairs[best])) best = a;
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + static_cast<long>(best));
            if (p.lcm.degree() > lim.degree_cap)
                throw ResourceLimitError("degree cap exceeded (" + std::to_string(lim.degree_cap) +
                                         ") during Groebner computation");
            VecP v, tr;
            if (track) tr = vec_zero(ring, ngens);
            spair(p, v, tr);
            VecP rem = reduce(std::move(v), ReduceStrategy::prefer_first, track ? &tr : nullptr);
            if (!vec_is_zero(rem)) {
                const Field& k = ring->field;
                mpq_class inv = k.inv(vec_leading_term(rem)->coeff);
                add_element(vec_scale(rem, inv), track ? vec_scale(tr, inv) : VecP{});
            }
        }
    }

    bool mod_lead_less(const ModTerm& a, const ModTerm& b) const {
        if (a.comp != b.comp) return a.comp > b.comp;  // later component = smaller in POT
        return grevlex_less(a.mono, b.mono);
    }

    void interreduce() {
        // drop elements whose lead another lead divides (smallest-lead first
        // so the surviving divisor is already kept)
        std::vector<int> order(basis.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (leads[a].comp != leads[b].comp || leads[a].mono != leads[b].mono)
                return mod_lead_less(leads[a], leads[b]);
            return a < b;
        });
        std::vector<VecP> nb, nt;
        std::vector<ModTerm> nl;
        for (int idx : order) {
            bool redundant = false;
            for (size_t k = 0; k < nl.size(); ++k)
                if (nl[k].comp == leads[idx].comp && nl[k].mono.divides(leads[idx].mono)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            nb.push_back(std::move(basis[idx]));
            if (track) nt.push_back(std::move(traces[idx]));
            nl.push_back(leads[idx]);
        }
        basis = std::move(nb);
        traces = std::move(nt);
        leads = std::move(nl);

        // tail-reduce each element against the others (their leads are fixed,
        // so a single pass reaches the fully reduced form), then make monic
        const Field& k = ring->field;
        for (size_t i = 0; i < basis.size(); ++i) {
            VecP self = std::move(basis[i]);
            VecP self_tr;
            if (track) self_tr = std::move(traces[i]);
            basis[i] = vec_zero(ring, rank);  // temporarily exclude from reducers
            ModTerm saved = leads[i];
            leads[i].comp = -1;
            VecP red = reduce(std::move(self), ReduceStrategy::prefer_first,
                              track ? &self_tr : nullptr);
            leads[i] = saved;
            mpq_class inv = k.inv(vec_leading_term(red)->coeff);
            basis[i] = vec_scale(red, inv);
            if (track) traces[i] = vec_scale(self_tr, inv);
        }

        // canonical order: ascending leads
        std::vector<int> ord(basis.size());
        for (size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
        std::sort(ord.begin(), ord.end(),
                  [&](int a, int b) { return mod_lead_less(leads[a], leads[b]); });
        std::vector<VecP> fb, ft;
        std::vector<ModTerm> fl;
        for (int idx : ord) {
            fb.push_back(std::move(basis[idx]));
            if (track) ft.push_back(std::move(traces[idx]));
            fl.push_back(leads[idx]);
        }
        basis = std::move(fb);
        traces = std::move(ft);
        leads = std::move(fl);
    }
};

}  // namespace

ModuleGB ModuleGB::compute(RingPtr ring, int rank, const std::vector<VecP>& gens, bool track,
                           const GBLimits& lim) {
    if (!ring) throw InvalidInputError("module GB needs a ring");
    Engine eng;
    eng.ring = ring;
    eng.rank = rank;
    eng.track = track;
    eng.ngens = static_cast<int>(gens.size());
    eng.lim = lim;

    ModuleGB out;
    out.ring_ = ring;
    out.rank_ = rank;
    out.ngens_ = eng.ngens;
    out.tracked_ = track;

    for (int i = 0; i < eng.ngens; ++i) {
        const VecP& g = gens[i];
        if (static_cast<int>(g.size()) != rank)
            throw InvalidInputError("generator rank mismatch in module GB");
        for (const auto& p : g) require_same_ring(p.ring(), ring, "module GB generators");
        if (vec_is_zero(g)) {
            out.zero_gen_indices_.push_back(i);
            continue;
        }
        VecP tr;
        if (track) {
            tr = vec_zero(ring, eng.ngens);
            tr[i] = Poly::constant(ring, 1);
        }
        // reduce incoming generator against current basis to keep it lean
        VecP rem = eng.basis.empty()
                       ? g
                       : eng.reduce(g, ReduceStrategy::prefer_first, track ? &tr : nullptr);
        if (vec_is_zero(rem)) continue;
        mpq_class inv = ring->field.inv(vec_leading_term(rem)->coeff);
        eng.add_element(vec_scale(rem, inv), track ? vec_scale(tr, inv) : VecP{});
    }
    eng.run();
    eng.interreduce();

    out.basis_ = std::move(eng.basis);
    out.traces_ = std::move(eng.traces);
    out.leads_ = std::move(eng.leads);
    out.gens_storage_ = gens;
    return out;
}

VecP ModuleGB::normal_form(const VecP& v, ReduceStrategy strategy, VecP* trace) const {
    if (static_cast<int>(v.size()) != rank_) throw InvalidInputError("rank mismatch in normal_form");
    if (trace && !tracked_) throw InvalidInputError("normal_form trace requested on untracked GB");
    const Field& k = ring_->field;
    int n = static_cast<int>(basis_.size());
    VecP rem = vec_zero(ring_, rank_);
    VecP work = v;
    while (true) {
        auto lt = vec_leading_term(work);
        if (!lt) break;
        int r = -1;
        if (strategy == ReduceStrategy::prefer_first) {
            for (int i = 0; i < n; ++i)
                if (leads_[i].comp == lt->comp && leads_[i].mono.divides(lt->mono)) {
                    r = i;
                    break;
                }
        } else {
            for (int i = n - 1; i >= 0; --i)
                if (leads_[i].comp == lt->comp && leads_[i].mono.divides(lt->mono)) {
                    r = i;
                    break;
                }
        }
        if (r >= 0) {
            Monomial m = leads_[r].mono.divide_into(lt->mono);
            mpq_class c = k.div(lt->coeff, leads_[r].coeff);
            work = vec_sub(work, vec_mul_term(basis_[r], m, c));
            if (trace) *trace = vec_sub(*trace, vec_mul_term(traces_[r], m, c));
        } else {
            Poly t = Poly::from_term(ring_, lt->mono, lt->coeff);
            rem[lt->comp] = rem[lt->comp].add(t);
            work[lt->comp] = work[lt->comp].sub(t);
        }
    }
    return rem;
}

std::vector<VecP> ModuleGB::syzygies(ReduceStrategy strategy) const {
    if (!tracked_) throw InvalidInputError("syzygies need a tracked module GB");
    std::vector<VecP> out;
    const Field& k = ring_->field;

    auto unit_trace = [&](int i) {
        VecP tr = vec_zero(ring_, ngens_);
        tr[i] = Poly::constant(ring_, 1);
        return tr;
    };

    // a zero column is its own syzygy
    for (int i : zero_gen_indices_) out.push_back(unit_trace(i));

    // generator-vs-basis relations: e_i - (expression of gen_i over the basis)
    for (int i = 0; i < ngens_; ++i) {
        const VecP& g = gens_storage_[static_cast<size_t>(i)];
        if (vec_is_zero(g)) continue;
        VecP tr = unit_trace(i);
        VecP rem = normal_form(g, strategy, &tr);
        if (!vec_is_zero(rem)) throw Error("internal: generator failed to reduce over its own GB");
        if (!vec_is_zero(tr)) out.push_back(std::move(tr));
    }

    // Schreyer generators: S-pair of every same-component basis pair reduces
    // to zero; its tracked combination is a syzygy of the original columns
    int t = static_cast<int>(basis_.size());
    const std::vector<ModTerm>& leads = leads_;
    for (int a = 0; a < t; ++a) {
        for (int b = a + 1; b < t; ++b) {
            if (leads[a].comp != leads[b].comp) continue;
            Monomial L = leads[a].mono.lcm(leads[b].mono);
            Monomial ua = leads[a].mono.divide_into(L);
            Monomial ub = leads[b].mono.divide_into(L);
            mpq_class ca = k.inv(leads[a].coeff);
            mpq_class cb = k.inv(leads[b].coeff);
            VecP v = vec_sub(vec_mul_term(basis_[a], ua, ca), vec_mul_term(basis_[b], ub, cb));
            VecP tr = vec_sub(vec_mul_term(traces_[a], ua, ca), vec_mul_term(traces_[b], ub, cb));
            VecP rem = normal_form(v, strategy, &tr);
            if (!vec_is_zero(rem)) throw Error("internal: S-pair of a Groebner basis did not reduce to zero");
            if (!vec_is_zero(tr)) out.push_back(std::move(tr));
        }
    }

    // drop exact duplicates
    std::vector<VecP> dedup;
    for (auto& w : out) {
        bool seen = false;
        for (const auto& u : dedup)
            if (vec_equal(u, w)) {
                seen = true;
                break;
            }
        if (!seen) dedup.push_back(std::move(w));
    }
    return dedup;
}

std::vector<int> minimal_generating_subset(const RingPtr& ring, int rank,
                                           const std::vector<VecP>& gens,
                                           const std::vector<int>& degrees,
                                           const GBLimits& lim) {
    if (gens.size() != degrees.size())
        throw InvalidInputError("degree list does not match generators");
    std::vector<int> order(gens.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degrees[a] < degrees[b]; });
    std::vector<int> accepted;
    std::vector<VecP> accepted_vecs;
    for (int idx : order) {
        if (vec_is_zero(gens[idx])) continue;
        if (!accepted_vecs.empty()) {
            ModuleGB gb = ModuleGB::compute(ring, rank, accepted_vecs, false, lim);
            if (gb.contains(gens[idx])) continue;
        }
        accepted.push_back(idx);
        accepted_vecs.push_back(gens[idx]);
    }
    return accepted;
}

}  // namespace oideal
