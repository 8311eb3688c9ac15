#include "oideal/homalg.hpp"

#include <algorithm>
#include <functional>

namespace oideal {

GradedMap Complex::map_at(int i) const {
    if (i >= 0 && i < static_cast<int>(maps.size())) return maps[static_cast<size_t>(i)];
    return GradedMap::zero(ring, term(i), term(i + 1));
}

Complex Complex::build(RingPtr ring, std::vector<GradedMap> ms) {
    Complex C;
    C.ring = std::move(ring);
    if (ms.empty()) throw InvalidInputError("complex needs at least one map");
    C.terms.push_back(ms.front().target());
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i + 1 < ms.size() && !(ms[i].source() == ms[i + 1].target()))
            throw InvalidInputError("complex terms do not line up at spot " + std::to_string(i + 1));
        C.terms.push_back(ms[i].source());
    }
    for (size_t i = 0; i + 1 < ms.size(); ++i)
        if (!ms[i].compose(ms[i + 1]).is_zero())
            throw InvalidInputError("complex composite nonzero at spot " + std::to_string(i + 1));
    C.maps = std::move(ms);
    return C;
}

Complex Complex::from_resolution(const Resolution& R) {
    return Complex::build(R.ring, R.diffs);
}

Complex dualize(const Complex& C) {
    int L = C.length();
    std::vector<GradedMap> ms;
    for (int j = L - 1; j >= 0; --j) ms.push_back(C.maps[static_cast<size_t>(j)].dual());
    if (ms.empty()) {
        // single-term complex: dual has the negated twists and no maps;
        // represent with one zero map out of the empty module
        FreeModule F;
        for (int tw : C.term(0).twists) F.twists.push_back(-tw);
        Complex D;
        D.ring = C.ring;
        D.terms.push_back(F);
        return D;
    }
    return Complex::build(C.ring, std::move(ms));
}

namespace {

// subsets of {0..n-1} of size j, each sorted increasing, in lexicographic order
void subsets_of_size(int n, int j, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == j) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

Complex koszul_complex(const std::vector<Poly>& seq) {
    if (seq.empty()) throw InvalidInputError("koszul_complex needs a nonempty sequence");
    RingPtr ring = seq.front().ring();
    std::vector<int> degs;
    for (const auto& f : seq) {
        require_same_ring(f.ring(), ring, "koszul_complex");
        if (f.is_zero() || !f.is_homogeneous())
            throw InvalidInputError("koszul_complex entries must be nonzero homogeneous");
        degs.push_back(f.degree());
    }
    int n = static_cast<int>(seq.size());

    std::vector<std::vector<std::vector<int>>> bases(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) subsets_of_size(n, j, bases[static_cast<size_t>(j)]);

    auto twist_of = [&](const std::vector<int>& S) {
        int t = 0;
        for (int v : S) t += degs[static_cast<size_t>(v)];
        return t;
    };

    std::vector<GradedMap> ms;
    for (int j = 1; j <= n; ++j) {
        const auto& src = bases[static_cast<size_t>(j)];
        const auto& tgt = bases[static_cast<size_t>(j) - 1];
        FreeModule Fs, Ft;
        for (const auto& S : src) Fs.twists.push_back(twist_of(S));
        for (const auto& S : tgt) Ft.twists.push_back(twist_of(S));
        std::vector<std::vector<Poly>> e(tgt.size(), std::vector<Poly>(src.size(), Poly::zero(ring)));
        for (size_t c = 0; c < src.size(); ++c) {
            const auto& S = src[c];
            for (int k = 0; k < j; ++k) {
                std::vector<int> T = S;
                T.erase(T.begin() + k);
                auto it = std::lower_bound(tgt.begin(), tgt.end(), T);
                size_t r = static_cast<size_t>(it - tgt.begin());
                Poly val = seq[static_cast<size_t>(S[static_cast<size_t>(k)])];
                if (k % 2 == 1) val = val.neg();
                e[r][c] = std::move(val);
            }
        }
        ms.emplace_back(ring, std::move(Ft), std::move(Fs), std::move(e));
    }
    return Complex::build(ring, std::move(ms));
}

Presentation ext_module(const Presentation& M, int i, const GBLimits& lim) {
    const RingPtr& ring = M.ring();
    if (i < 0 || i > ring->nvars())
        throw InvalidInputError("ext_module index out of range 0..n");
    Resolution res = minimal_free_resolution(M, i + 1, true, lim);
    int L = res.length();
    if (res.complete && i > L)
        return free_presentation(ring, FreeModule{});  // Ext vanishes past pd

    FreeModule Fi = res.term(i);
    if (Fi.rank() == 0) return free_presentation(ring, FreeModule{});

    // B = phi_{i+1}^* : F_i^* -> F_{i+1}^*
    GradedMap B = (i < static_cast<int>(res.diffs.size()))
                      ? res.diffs[static_cast<size_t>(i)].dual()
                      : [&] {
                            FreeModule dual_fi;
                            for (int tw : Fi.twists) dual_fi.twists.push_back(-tw);
                            return GradedMap::zero(ring, FreeModule{}, dual_fi);
                        }();
    GradedMap K = kernel_of_map(B, lim);

    std::vector<VecP> relcols;
    if (i >= 1) {
        // express im(phi_i^*) over the kernel generators
        GradedMap A = res.diffs[static_cast<size_t>(i) - 1].dual();
        for (int c = 0; c < A.cols(); ++c) {
            auto w = lift_through(K, A.column(c), ReduceStrategy::prefer_first, lim);
            if (!w) throw Error("internal: im(phi_i^*) not inside ker(phi_{i+1}^*)");
            relcols.push_back(*w);
        }
    }
    GradedMap S = syzygies(K, true, lim);
    for (int c = 0; c < S.cols(); ++c) relcols.push_back(S.column(c));

    GradedMap relations = GradedMap::from_columns(ring, K.source(), relcols);
    return minimal_generators(Presentation{relations});
}

ChainMapLift lift_chain_map(const GradedMap& f0, const Complex& F, const Complex& G, int up_to,
                            ReduceStrategy strategy, const GBLimits& lim) {
    require_same_ring(f0.ring(), F.ring, "lift_chain_map");
    if (!(f0.source() == F.term(0)) || !(f0.target() == G.term(0)))
        throw InvalidInputError("lift_chain_map: f0 shape does not match the complexes");
    ChainMapLift L;
    L.inducing = f0;
    L.components.push_back(f0);
    int top = std::min(up_to, F.length());
    for (int i = 1; i <= top; ++i) {
        GradedMap rhs = L.components.back().compose(F.map_at(i - 1));  // f_{i-1} o dF_i
        GradedMap Gd = G.map_at(i - 1);                                // dG_i : G_i -> G_{i-1}
        std::vector<VecP> cols;
        for (int c = 0; c < rhs.cols(); ++c) {
            auto w = lift_through(Gd, rhs.column(c), strategy, lim);
            if (!w)
                throw LiftError("chain map lift failed at stage " + std::to_string(i) +
                                    ": target not acyclic there or the map is ill-defined",
                                i);
            cols.push_back(*w);
        }
        // assemble f_i with the correct source twists even when rows vanish
        std::vector<std::vector<Poly>> e(static_cast<size_t>(G.term(i).rank()),
                                         std::vector<Poly>(static_cast<size_t>(F.term(i).rank()),
                                                           Poly::zero(F.ring)));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < G.term(i).rank(); ++r) e[static_cast<size_t>(r)][c] = cols[c][static_cast<size_t>(r)];
        L.components.emplace_back(F.ring, G.term(i), F.term(i), std::move(e));
    }
    return L;
}

Complex mapping_cone(const ChainMapLift& L, const Complex& F, const Complex& G) {
    const RingPtr& ring = F.ring;
    int len = std::max(G.length(), F.length() + 1);
    std::vector<GradedMap> ms;
    for (int i = 1; i <= len; ++i) {
        FreeModule tgt, src;
        FreeModule Gi = G.term(i), Gprev = G.term(i - 1);
        FreeModule Fi1 = F.term(i - 1), Fprev = F.term(i - 2);
        for (int tw : Gprev.twists) tgt.twists.push_back(tw);
        for (int tw : Fprev.twists) tgt.twists.push_back(tw);
        for (int tw : Gi.twists) src.twists.push_back(tw);
        for (int tw : Fi1.twists) src.twists.push_back(tw);
        std::vector<std::vector<Poly>> e(static_cast<size_t>(tgt.rank()),
                                         std::vector<Poly>(static_cast<size_t>(src.rank()),
                                                           Poly::zero(ring)));
        GradedMap dG = G.map_at(i - 1);
        for (int r = 0; r < Gprev.rank(); ++r)
            for (int c = 0; c < Gi.rank(); ++c) e[static_cast<size_t>(r)][static_cast<size_t>(c)] = dG.entry(r, c);
        if (i - 1 <= L.top()) {
            const GradedMap& f = L.component(i - 1);
            for (int r = 0; r < Gprev.rank(); ++r)
                for (int c = 0; c < Fi1.rank(); ++c)
                    e[static_cast<size_t>(r)][static_cast<size_t>(Gi.rank() + c)] = f.entry(r, c);
        }
        if (i >= 2) {
            GradedMap dF = F.map_at(i - 2);
            for (int r = 0; r < Fprev.rank(); ++r)
                for (int c = 0; c < Fi1.rank(); ++c)
                    e[static_cast<size_t>(Gprev.rank() + r)][static_cast<size_t>(Gi.rank() + c)] =
                        dF.entry(r, c).neg();
        }
        ms.emplace_back(ring, std::move(tgt), std::move(src), std::move(e));
    }
    return Complex::build(ring, std::move(ms));
}

bool KMatrix::is_zero() const {
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

bool KMatrix::is_identity() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != (r == c ? 1 : 0)) return false;
    return true;
}

std::vector<std::string> KMatrix::entry_strings(const Field& k) const {
    std::vector<std::string> out;
    for (const auto& row : a)
        for (const auto& v : row) out.push_back(k.to_string(v));
    return out;
}

KMatrix mod_m(const GradedMap& f) {
    KMatrix M;
    M.rows = f.rows();
    M.cols = f.cols();
    const Field& k = f.ring()->field;
    M.a.assign(static_cast<size_t>(M.rows), std::vector<mpq_class>(static_cast<size_t>(M.cols), 0));
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c)
            M.a[static_cast<size_t>(r)][static_cast<size_t>(c)] = k.reduce(f.entry(r, c).constant_coeff());
    return M;
}

KMatrix tor_map(const GradedMap& f, const Resolution& M, const Resolution& N, int i,
                ReduceStrategy strategy, const GBLimits& lim) {
    if (!M.minimal || !N.minimal)
        throw InvalidInputError("tor_map requires minimal resolutions on both sides");
    Complex CF = Complex::from_resolution(M);
    Complex CG = Complex::from_resolution(N);
    if (i > CF.length()) {
        KMatrix Z;
        Z.rows = (i <= CG.length()) ? CG.term(i).rank() : 0;
        Z.cols = 0;
        Z.a.assign(static_cast<size_t>(Z.rows), {});
        return Z;
    }
    ChainMapLift L = lift_chain_map(f, CF, CG, i, strategy, lim);
    return mod_m(L.component(i));
}

}  // namespace oideal
