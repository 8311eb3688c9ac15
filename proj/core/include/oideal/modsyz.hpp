#ifndef OIDEAL_MODSYZ_HPP
#define OIDEAL_MODSYZ_HPP

#include <optional>

#include "oideal/graded_map.hpp"

namespace oideal {

// Finitely presented graded module: coker(relations). Generators are the
// target basis of the relation matrix.
struct Presentation {
    GradedMap relations;

    const RingPtr& ring() const { return relations.ring(); }
    const FreeModule& generators() const { return relations.target(); }
    int ngens() const { return relations.target().rank(); }
};

Presentation free_presentation(RingPtr ring, FreeModule F);
Presentation cyclic_presentation(const Ideal& I);  // R/I

// Map whose image is exactly ker(M), computed by tracked module Groebner
// reduction (Schreyer-style): the syzygy module of the columns of M.
// Verifies M o result = 0. When minimalize is set the columns form a minimal
// generating set of the kernel.
GradedMap syzygies(const GradedMap& M, bool minimalize = true,
                   const GBLimits& lim = default_limits(),
                   ReduceStrategy strategy = ReduceStrategy::prefer_first);

// identical engine, exposed separately for complexes
GradedMap kernel_of_map(const GradedMap& M, const GBLimits& lim = default_limits());

// w with M*w = v when v lies in im(M); nullopt otherwise.
std::optional<VecP> lift_through(const GradedMap& M, const VecP& v,
                                 ReduceStrategy strategy = ReduceStrategy::prefer_first,
                                 const GBLimits& lim = default_limits());

// Same module, relation matrix with no unit entries; target rank = nu.
// Pivots choose the lexicographically-first unit entry for determinism.
Presentation minimal_generators(const Presentation& P);

int nu(const Presentation& P);

// { f : f * module = 0 }, per-generator colon intersected over generators.
Ideal annihilator(const Presentation& P, const GBLimits& lim = default_limits());

// dim_k of the degree-t piece of the presented module
long presentation_hf(const Presentation& P, int t, const GBLimits& lim = default_limits());

// M(shift): all generator and relation twists drop by shift
Presentation twist_presentation(const Presentation& P, int shift);

// default degree bound for Hilbert-function comparisons
int hf_bound(const Presentation& P);

// dim of the presented module = dim R/ann; nullopt for the zero module
std::optional<int> presentation_dim(const Presentation& P, const GBLimits& lim = default_limits());

}  // namespace oideal

#endif
