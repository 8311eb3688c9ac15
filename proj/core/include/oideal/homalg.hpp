#ifndef OIDEAL_HOMALG_HPP
#define OIDEAL_HOMALG_HPP

#include "oideal/resolution.hpp"

namespace oideal {

// Finite complex of graded free modules, chain-indexed: maps[i] goes
// C_{i+1} -> C_i. Consecutive composites are checked to vanish.
struct Complex {
    RingPtr ring;
    std::vector<FreeModule> terms;  // C_0 .. C_L
    std::vector<GradedMap> maps;    // maps.size() == terms.size() - 1

    int length() const { return static_cast<int>(terms.size()) - 1; }
    FreeModule term(int i) const {
        return (i >= 0 && i < static_cast<int>(terms.size())) ? terms[static_cast<size_t>(i)]
                                                              : FreeModule{};
    }
    // maps[i] padded with zero maps outside the stored range
    GradedMap map_at(int i) const;

    static Complex build(RingPtr ring, std::vector<GradedMap> maps);
    static Complex from_resolution(const Resolution& R);
};

// Hom(-, R): transposed matrices, negated twists, reversed arrows.
// dualize(dualize(C)) equals C up to the canonical re-indexing.
Complex dualize(const Complex& C);

// Exterior-algebra complex on the sequence, signs by increasing-index wedge
// ordering. Length = seq.size().
Complex koszul_complex(const std::vector<Poly>& seq);

// Minimal presentation of Ext^i(M, R) = H^i(Hom(F_*, R)) for the minimal
// free resolution F_* of M. 0 <= i <= nvars.
Presentation ext_module(const Presentation& M, int i, const GBLimits& lim = default_limits());

struct ChainMapLift {
    std::vector<GradedMap> components;  // f_i: F_i -> G_i
    GradedMap inducing;                 // the degree-0 component data it lifts

    const GradedMap& component(int i) const { return components.at(static_cast<size_t>(i)); }
    int top() const { return static_cast<int>(components.size()) - 1; }
};

// Lift f0 (on the 0-th terms, inducing a map of H_0's) to a chain map
// F -> G. G must be acyclic through the lifting range; failures throw
// LiftError carrying the stage index. Lifts up to min(F.length, up_to).
ChainMapLift lift_chain_map(const GradedMap& f0, const Complex& F, const Complex& G, int up_to,
                            ReduceStrategy strategy = ReduceStrategy::prefer_first,
                            const GBLimits& lim = default_limits());

// Standard cone with differential [[d_G, f], [0, -d_F]].
Complex mapping_cone(const ChainMapLift& L, const Complex& F, const Complex& G);

// Matrix over the coefficient field k.
struct KMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<mpq_class>> a;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const KMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    std::vector<std::string> entry_strings(const Field& k) const;
};

// The i-th component of a lift of f : M -> N (given on generators of minimal
// presentations), reduced entrywise to constant terms. Because both
// resolutions are minimal this matrix is Tor_i(k, M) -> Tor_i(k, N) in the
// monomial bases; it does not depend on the lift.
KMatrix tor_map(const GradedMap& f, const Resolution& M, const Resolution& N, int i,
                ReduceStrategy strategy = ReduceStrategy::prefer_first,
                const GBLimits& lim = default_limits());

// entrywise constant-term reduction of a graded map
KMatrix mod_m(const GradedMap& f);

}  // namespace oideal

#endif
