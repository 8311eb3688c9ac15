#include "oideal/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace oideal {

namespace {

// Pivot unit entries of `next` (phi_{i+1}); each pivot deletes one redundant
// column of `prev` (phi_i). Valid because prev o next = 0 (mod J when given).
// Returns true if anything changed.
bool pivot_pair(GradedMap& prev, GradedMap& next, const RingPtr& ring,
                const GroebnerBasis* GJ) {
    auto nf = [&](const Poly& p) { return GJ ? normal_form(p, *GJ) : p; };
    bool changed = false;
    std::vector<std::vector<Poly>> a = next.entries();       // rows: F_i, cols: F_{i+1}
    std::vector<int> rtw = next.target().twists;             // F_i
    std::vector<int> ctw = next.source().twists;             // F_{i+1}
    std::vector<std::vector<Poly>> pm = prev.entries();      // rows: F_{i-1}, cols: F_i
    std::vector<int> ptw = prev.target().twists;

    while (true) {
        int pr = -1, pc = -1;
        for (int r = 0; r < static_cast<int>(rtw.size()) && pr < 0; ++r)
            for (int c = 0; c < static_cast<int>(ctw.size()); ++c)
                if (a[r][c].is_unit()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        changed = true;
        const Field& k = ring->field;
        mpq_class uinv = k.inv(a[pr][pc].leading_coeff());
        std::vector<std::vector<Poly>> na;
        for (int r = 0; r < static_cast<int>(rtw.size()); ++r) {
            if (r == pr) continue;
            std::vector<Poly> row;
            for (int c = 0; c < static_cast<int>(ctw.size()); ++c) {
                if (c == pc) continue;
                row.push_back(nf(a[r][c].sub(a[r][pc].mul(a[pr][c]).scale(uinv))));
            }
            na.push_back(std::move(row));
        }
        a = std::move(na);
        // prev loses the column of the cancelled F_i basis vector
        for (auto& row : pm) row.erase(row.begin() + pr);
        rtw.erase(rtw.begin() + pr);
        ctw.erase(ctw.begin() + pc);
    }
    if (changed) {
        prev = GradedMap(ring, FreeModule{ptw}, FreeModule{rtw}, pm);
        next = GradedMap(ring, FreeModule{rtw}, FreeModule{ctw}, a);
    }
    return changed;
}

GradedMap nf_map(const GradedMap& M, const GroebnerBasis& GJ) {
    std::vector<std::vector<Poly>> e = M.entries();
    for (auto& row : e)
        for (auto& p : row) p = normal_form(p, GJ);
    return GradedMap(M.ring(), M.target(), M.source(), std::move(e));
}

std::vector<VecP> jblock_columns(const RingPtr& ring, const FreeModule& F, const Ideal& J) {
    std::vector<VecP> cols;
    for (int r = 0; r < F.rank(); ++r)
        for (const auto& g : J.gens()) {
            VecP col = vec_zero(ring, F.rank());
            col[r] = g;
            cols.push_back(std::move(col));
        }
    return cols;
}

int vec_module_degree(const VecP& v, const std::vector<int>& twists) {
    for (size_t r = 0; r < v.size(); ++r)
        if (!v[r].is_zero()) return v[r].degree() + twists[r];
    return 0;
}

// generators of { v : A v = 0 over R/J }, entries reduced mod J
GradedMap quotient_syzygies(const GradedMap& A, const Ideal& J, const GroebnerBasis& GJ,
                            const GBLimits& lim) {
    const RingPtr& ring = A.ring();
    std::vector<VecP> cols = A.columns();
    size_t s = cols.size();
    std::vector<VecP> aug = cols;
    for (auto& c : jblock_columns(ring, A.target(), J)) aug.push_back(std::move(c));

    ModuleGB gb = ModuleGB::compute(ring, A.rows(), aug, true, lim);
    std::vector<VecP> raw;
    for (const auto& w : gb.syzygies()) {
        VecP head(w.begin(), w.begin() + static_cast<long>(s));
        for (auto& p : head) p = normal_form(p, GJ);
        if (!vec_is_zero(head)) raw.push_back(std::move(head));
    }

    // minimal generators over S: membership tested against accepted + J-block
    const std::vector<int>& twists = A.source().twists;
    std::vector<int> degs;
    for (const auto& v : raw) degs.push_back(vec_module_degree(v, twists));
    std::vector<int> order(raw.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return degs[x] < degs[y]; });

    std::vector<VecP> jb = jblock_columns(ring, A.source(), J);
    std::vector<VecP> accepted;
    for (int idx : order) {
        std::vector<VecP> test = accepted;
        for (const auto& c : jb) test.push_back(c);
        if (!test.empty()) {
            ModuleGB agb = ModuleGB::compute(ring, A.cols(), test, false, lim);
            if (agb.contains(raw[idx])) continue;
        }
        accepted.push_back(raw[idx]);
    }
    GradedMap out = GradedMap::from_columns(ring, A.source(), accepted);
    // composite must vanish over S
    GradedMap comp = A.compose(out);
    for (const auto& row : comp.entries())
        for (const auto& p : row)
            if (!normal_form(p, GJ).is_zero())
                throw Error("internal: quotient syzygy postcondition failed");
    return out;
}

}  // namespace

FreeModule Resolution::term(int i) const {
    if (i == 0) return augmentation.relations.target();
    if (i <= static_cast<int>(diffs.size())) return diffs[static_cast<size_t>(i - 1)].source();
    return FreeModule{};
}

int Resolution::length() const {
    for (int i = static_cast<int>(diffs.size()); i >= 1; --i)
        if (diffs[static_cast<size_t>(i - 1)].source().rank() > 0) return i;
    return 0;
}

std::string BettiTable::to_string() const {
    std::ostringstream os;
    os << "total:";
    for (long b : ranks) os << " " << b;
    os << "\n";
    for (const auto& [key, v] : entries)
        os << "  b(" << key.first << "," << key.second << ") = " << v << "\n";
    return os.str();
}

Resolution minimal_free_resolution(const Presentation& P, int max_len, bool minimalize_steps,
                                   const GBLimits& lim) {
    if (max_len < 1) throw InvalidInputError("max_len must be >= 1");
    Presentation aug = minimalize_steps ? minimal_generators(P) : P;

    Resolution C;
    C.ring = P.ring();
    C.augmentation = aug;
    C.diffs.push_back(aug.relations);

    while (static_cast<int>(C.diffs.size()) < max_len) {
        GradedMap& last = C.diffs.back();
        if (last.source().rank() == 0) break;
        GradedMap S = syzygies(last, minimalize_steps, lim);
        if (minimalize_steps && !S.entries_in_maximal_ideal()) {
            // redundant columns upstream; cancel them in place
            pivot_pair(last, S, C.ring, nullptr);
        }
        if (S.source().rank() == 0) {
            C.complete = true;
            break;
        }
        C.diffs.push_back(std::move(S));
    }
    if (C.diffs.back().source().rank() == 0) C.complete = true;
    C.augmentation = Presentation{C.diffs.front()};

    if (minimalize_steps) {
        for (const auto& d : C.diffs)
            if (!d.entries_in_maximal_ideal())
                throw Error("internal: minimal resolution step left a unit entry");
        C.minimal = true;
    }
    return C;
}

Resolution minimalize(const Resolution& Cin) {
    const RingPtr& ring = Cin.ring;
    const GroebnerBasis* GJ = nullptr;
    GroebnerBasis gj;
    if (Cin.quotient) {
        gj = Cin.quotient->groebner();
        GJ = &gj;
    }
    auto nf = [&](const Poly& p) { return GJ ? normal_form(p, *GJ) : p; };

    // mutable complex: twists for F_0..F_L and the matrices between them
    std::vector<std::vector<int>> tw;
    tw.push_back(Cin.term0().twists);
    for (const auto& d : Cin.diffs) tw.push_back(d.source().twists);
    std::vector<std::vector<std::vector<Poly>>> mats;
    for (const auto& d : Cin.diffs) mats.push_back(d.entries());

    const Field& fld = ring->field;
    while (true) {
        int mk = -1, mr = -1, mc = -1;
        for (int k = 0; k < static_cast<int>(mats.size()) && mk < 0; ++k)
            for (int r = 0; r < static_cast<int>(tw[k].size()) && mk < 0; ++r)
                for (int c = 0; c < static_cast<int>(tw[k + 1].size()); ++c)
                    if (mats[k][r][c].is_unit()) {
                        mk = k, mr = r, mc = c;
                        break;
                    }
        if (mk < 0) break;

        mpq_class uinv = fld.inv(mats[mk][mr][mc].leading_coeff());
        // Schur complement on phi_{mk+1}
        std::vector<std::vector<Poly>> na;
        for (int r = 0; r < static_cast<int>(tw[mk].size()); ++r) {
            if (r == mr) continue;
            std::vector<Poly> row;
            for (int c = 0; c < static_cast<int>(tw[mk + 1].size()); ++c) {
                if (c == mc) continue;
                row.push_back(nf(mats[mk][r][c].sub(mats[mk][r][mc].mul(mats[mk][mr][c]).scale(uinv))));
            }
            na.push_back(std::move(row));
        }
        mats[mk] = std::move(na);
        // phi_{mk+2} loses row mc, phi_mk loses column mr
        if (mk + 1 < static_cast<int>(mats.size()))
            mats[mk + 1].erase(mats[mk + 1].begin() + mc);
        if (mk - 1 >= 0)
            for (auto& row : mats[mk - 1]) row.erase(row.begin() + mr);
        tw[mk].erase(tw[mk].begin() + mr);
        tw[mk + 1].erase(tw[mk + 1].begin() + mc);
    }

    Resolution out;
    out.ring = ring;
    out.quotient = Cin.quotient;
    out.complete = Cin.complete;
    for (size_t k = 0; k < mats.size(); ++k)
        out.diffs.emplace_back(ring, FreeModule{tw[k]}, FreeModule{tw[k + 1]}, mats[k]);
    // drop trailing zero-source differentials beyond the first
    while (out.diffs.size() > 1 && out.diffs.back().source().rank() == 0 &&
           out.diffs[out.diffs.size() - 2].source().rank() == 0)
        out.diffs.pop_back();
    out.augmentation = Presentation{out.diffs.front()};
    out.minimal = true;
    for (const auto& d : out.diffs)
        if (!d.entries_in_maximal_ideal()) out.minimal = false;
    return out;
}

BettiTable betti_table(const Resolution& C) {
    if (!C.minimal) throw InvalidInputError("betti_table requires a minimal resolution");
    BettiTable T;
    int L = static_cast<int>(C.diffs.size());
    T.ranks.resize(static_cast<size_t>(L) + 1, 0);
    for (int i = 0; i <= L; ++i) {
        FreeModule F = C.term(i);
        T.ranks[static_cast<size_t>(i)] = F.rank();
        for (int tw : F.twists) ++T.entries[{i, tw}];
    }
    while (T.ranks.size() > 1 && T.ranks.back() == 0) T.ranks.pop_back();
    return T;
}

Resolution quotient_ring_resolution(const Ideal& J, const Presentation& P, int max_len,
                                    const GBLimits& lim) {
    if (max_len < 1) throw InvalidInputError("max_len must be >= 1");
    require_same_ring(J.ring(), P.ring(), "quotient_ring_resolution");
    if (!is_proper(J, lim)) throw InvalidInputError("quotient by the unit ideal");
    const RingPtr& ring = P.ring();
    GroebnerBasis GJ = J.groebner(lim);

    // reduce the presentation mod J and take minimal generators over S
    Presentation base{nf_map(P.relations, GJ)};
    // a pivot over S needs NF'd Schur updates; reuse minimal_generators and re-reduce
    Presentation aug = base;
    while (true) {
        Presentation next = minimal_generators(aug);
        next = Presentation{nf_map(next.relations, GJ)};
        bool units = false;
        for (const auto& row : next.relations.entries())
            for (const auto& p : row)
                if (p.is_unit()) units = true;
        aug = next;
        if (!units) break;
    }

    Resolution C;
    C.ring = ring;
    C.quotient = J;
    C.augmentation = aug;
    C.diffs.push_back(aug.relations);

    while (static_cast<int>(C.diffs.size()) < max_len) {
        GradedMap& last = C.diffs.back();
        if (last.source().rank() == 0) break;
        GradedMap S = quotient_syzygies(last, J, GJ, lim);
        if (!S.entries_in_maximal_ideal()) pivot_pair(last, S, ring, &GJ);
        if (S.source().rank() == 0) {
            C.complete = true;
            break;
        }
        C.diffs.push_back(std::move(S));
    }
    if (C.diffs.back().source().rank() == 0) C.complete = true;
    C.augmentation = Presentation{C.diffs.front()};
    C.minimal = true;
    for (const auto& d : C.diffs)
        if (!d.entries_in_maximal_ideal())
            throw Error("internal: quotient resolution left a unit entry");
    return C;
}

Certification certify_resolution(const Resolution& C, const GBLimits& lim) {
    Certification cert;
    const RingPtr& ring = C.ring;
    const GroebnerBasis* GJ = nullptr;
    GroebnerBasis gj;
    if (C.quotient) {
        gj = C.quotient->groebner(lim);
        GJ = &gj;
    }
    auto zero_mod = [&](const Poly& p) { return GJ ? normal_form(p, *GJ).is_zero() : p.is_zero(); };

    int L = static_cast<int>(C.diffs.size());
    for (int k = 0; k + 1 < L; ++k) {
        GradedMap comp = C.diffs[static_cast<size_t>(k)].compose(C.diffs[static_cast<size_t>(k) + 1]);
        bool zero = true;
        for (const auto& row : comp.entries())
            for (const auto& p : row)
                if (!zero_mod(p)) zero = false;
        if (!zero)
            cert.fail("composite phi_" + std::to_string(k + 1) + " o phi_" + std::to_string(k + 2) +
                      " is nonzero");
    }

    if (C.minimal)
        for (int k = 0; k < L; ++k)
            if (!C.diffs[static_cast<size_t>(k)].entries_in_maximal_ideal())
                cert.fail("differential phi_" + std::to_string(k + 1) + " has a unit entry");

    if (!C.quotient && C.minimal && C.complete && C.length() > ring->nvars())
        cert.fail("length " + std::to_string(C.length()) + " exceeds the variable count " +
                  std::to_string(ring->nvars()));

    // exactness: generators of ker(phi_k) lie in im(phi_{k+1}); the converse
    // is the composite-zero check above
    for (int k = 0; k + 1 < L; ++k) {
        const GradedMap& cur = C.diffs[static_cast<size_t>(k)];
        const GradedMap& nxt = C.diffs[static_cast<size_t>(k) + 1];
        GradedMap K = GJ ? quotient_syzygies(cur, *C.quotient, *GJ, lim) : syzygies(cur, true, lim);
        for (int c = 0; c < K.cols(); ++c) {
            std::optional<VecP> w;
            if (GJ) {
                std::vector<VecP> aug = nxt.columns();
                for (auto& jc : jblock_columns(ring, nxt.target(), *C.quotient))
                    aug.push_back(std::move(jc));
                ModuleGB gb = ModuleGB::compute(ring, nxt.rows(), aug, false, lim);
                if (gb.contains(K.column(c))) w = VecP{};
            } else {
                w = lift_through(nxt, K.column(c), ReduceStrategy::prefer_first, lim);
            }
            if (!w) {
                cert.fail("kernel generator at homological spot " + std::to_string(k + 1) +
                          " is not in the image of phi_" + std::to_string(k + 2));
                break;
            }
        }
    }
    if (C.complete && L >= 1 && C.diffs.back().source().rank() > 0) {
        const GradedMap& last = C.diffs.back();
        GradedMap K = GJ ? quotient_syzygies(last, *C.quotient, *GJ, lim) : syzygies(last, true, lim);
        if (K.cols() != 0) cert.fail("resolution marked complete but the last kernel is nonzero");
    }

    // alternating Hilbert-function identity (complete resolutions over R)
    if (!C.quotient && C.complete) {
        int bound = hf_bound(C.augmentation);
        int n = ring->nvars();
        for (int t = 0; t <= bound; ++t) {
            long lhs = 0;
            for (int i = 0; i <= C.length(); ++i) {
                long piece = C.term(i).piece_dim(n, t);
                lhs += (i % 2 == 0) ? piece : -piece;
            }
            long rhs = presentation_hf(C.augmentation, t, lim);
            if (lhs != rhs) {
                cert.fail("alternating Hilbert sum mismatch at degree " + std::to_string(t));
                break;
            }
        }
    }
    return cert;
}

}  // namespace oideal
