#ifndef OIDEAL_MODULE_GB_HPP
#define OIDEAL_MODULE_GB_HPP

#include <optional>
#include <vector>

#include "oideal/poly.hpp"

namespace oideal {

// Element of a free module R^r, dense by component. Component 0 dominates in
// the position-over-term order; ties within a component are grevlex.
using VecP = std::vector<Poly>;

struct GBLimits {
    int degree_cap = 24;
    long pair_cap = 1000000;
};

// Process-wide defaults, adjustable once at CLI startup (before any
// concurrent work begins).
GBLimits& default_limits();

enum class ReduceStrategy { prefer_first, prefer_last };

bool vec_is_zero(const VecP& v);
VecP vec_zero(const RingPtr& ring, int rank);
VecP vec_add(const VecP& a, const VecP& b);
VecP vec_sub(const VecP& a, const VecP& b);
VecP vec_neg(const VecP& a);
VecP vec_mul_term(const VecP& a, const Monomial& m, const mpq_class& c);
VecP vec_mul_poly(const VecP& a, const Poly& p);
VecP vec_scale(const VecP& a, const mpq_class& c);
bool vec_equal(const VecP& a, const VecP& b);

struct ModTerm {
    int comp;
    Monomial mono;
    mpq_class coeff;
};

// position-over-term leading term; nullopt for zero
std::optional<ModTerm> vec_leading_term(const VecP& v);

// Groebner basis of the submodule of R^rank generated by the given columns,
// interreduced and monic. When tracked, traces() expresses each basis element
// as a combination of the original generators: basis[k] = gens * traces[k].
class ModuleGB {
public:
    static ModuleGB compute(RingPtr ring, int rank, const std::vector<VecP>& gens, bool track,
                            const GBLimits& lim = default_limits());

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    int ngens_original() const { return ngens_; }
    const std::vector<VecP>& basis() const { return basis_; }
    const std::vector<VecP>& traces() const { return traces_; }

    // Full normal form. When trace is non-null it must hold ngens_original()
    // polynomials; every reduction step v -= q*basis[k] also performs
    // trace -= q*traces[k], so membership certificates come out for free.
    VecP normal_form(const VecP& v, ReduceStrategy strategy = ReduceStrategy::prefer_first,
                     VecP* trace = nullptr) const;

    bool contains(const VecP& v) const { return vec_is_zero(normal_form(v)); }

    // Generators of the syzygy module of the ORIGINAL generator list: every
    // w in the result satisfies gens * w = 0, and the w's generate all such
    // relations. Requires track = true at compute time.
    std::vector<VecP> syzygies(ReduceStrategy strategy = ReduceStrategy::prefer_first) const;

private:
    RingPtr ring_;
    int rank_ = 0;
    int ngens_ = 0;
    bool tracked_ = false;
    std::vector<VecP> basis_;
    std::vector<VecP> traces_;
    std::vector<ModTerm> leads_;
    std::vector<VecP> gens_storage_;
    std::vector<int> zero_gen_indices_;
};

// Indices of a minimal generating subset of the given homogeneous module
// elements (graded Nakayama greedy: process by ascending degree, drop
// anything the accepted part already generates). degrees[i] is the module
// degree of gens[i].
std::vector<int> minimal_generating_subset(const RingPtr& ring, int rank,
                                           const std::vector<VecP>& gens,
                                           const std::vector<int>& degrees,
                                           const GBLimits& lim = default_limits());

}  // namespace oideal

#endif
