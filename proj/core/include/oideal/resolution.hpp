#ifndef OIDEAL_RESOLUTION_HPP
#define OIDEAL_RESOLUTION_HPP

#include <map>
#include <optional>
#include <string>

#include "oideal/modsyz.hpp"

namespace oideal {

struct BettiTable {
    // (homological index i, internal degree j) -> b_{i,j}
    std::map<std::pair<int, int>, long> entries;
    std::vector<long> ranks;  // b_i

    long rank(int i) const { return i >= 0 && i < static_cast<int>(ranks.size()) ? ranks[i] : 0; }
    std::string to_string() const;
};

// Finite complex of graded free modules ... -> F_1 -> F_0 resolving the
// augmentation module. diffs[i-1] is phi_i: F_i -> F_{i-1}. When quotient is
// set the entries are R-lifts read modulo that ideal and the complex lives
// over R/J.
struct Resolution {
    RingPtr ring;
    Presentation augmentation;
    std::vector<GradedMap> diffs;
    bool minimal = false;
    bool complete = false;  // the last computed kernel was zero
    std::optional<Ideal> quotient;

    const FreeModule& term0() const { return augmentation.relations.target(); }
    // F_i; rank-0 module beyond the computed length
    FreeModule term(int i) const;
    // largest i with F_i nonzero
    int length() const;
};

// Iterated syzygies with per-step minimalization. max_len >= 1 bounds the
// number of differentials computed. With minimalize=false the raw (possibly
// redundant) syzygy generating sets are kept; that path exists as a testing
// oracle for Betti/Tor consistency.
Resolution minimal_free_resolution(const Presentation& P, int max_len, bool minimalize = true,
                                   const GBLimits& lim = default_limits());

// Homotopy-equivalent minimal resolution: unit entries pivoted away across
// the whole complex. Betti ranks weakly decrease entrywise.
Resolution minimalize(const Resolution& C);

// requires C.minimal
BettiTable betti_table(const Resolution& C);

// Truncated minimal resolution over R/J: lift to R, append J*basis relations
// at each syzygy step, minimalize. No length guarantee; max_len is mandatory.
Resolution quotient_ring_resolution(const Ideal& J, const Presentation& P, int max_len,
                                    const GBLimits& lim = default_limits());

struct Certification {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// composite-zero, exactness via kernel-lift both ways, minimality of entries,
// length bound over R, and the alternating Hilbert-function identity.
Certification certify_resolution(const Resolution& C, const GBLimits& lim = default_limits());

}  // namespace oideal

#endif
