#ifndef OIDEAL_CONJECTURES_HPP
#define OIDEAL_CONJECTURES_HPP

#include <cstdint>

#include "oideal/homalg.hpp"
#include "oideal/report.hpp"

namespace oideal {

// Order Ideal Conjecture instance check: for every minimal generator of
// Syz^i(M), i in [i_lo, i_hi] clipped to the resolution length, the ideal of
// its entries has grade >= i.
CheckReport order_ideal_report(const Presentation& M, int i_lo, int i_hi,
                               const std::string& instance_id,
                               const GBLimits& lim = default_limits());

// theta_i: K_i(gens; R) (x) k -> Tor_i(R/I, k), the i-th component mod m of a
// lift of the identity on R/I from the Koszul complex to the minimal
// resolution. Vanishing is claimed (and checked) for i > height(I).
struct ThetaResult {
    KMatrix matrix;
    CheckReport report;
};
ThetaResult theta_matrix(const std::vector<Poly>& gens, int i, const std::string& instance_id,
                         const GBLimits& lim = default_limits());

// Omega = Ext^d(R/I, R) as a minimal presentation, d = grade(I).
struct CanonicalResult {
    Presentation omega;
    CheckReport report;
};
CanonicalResult canonical_module(const Ideal& I, const std::string& instance_id,
                                 const GBLimits& lim = default_limits());

// Omega realized as ((x) : I)/(x) over S = R/(x), twist-normalized so its
// Hilbert function matches the Ext realization on the nose.
CanonicalResult canonical_via_colon(const Ideal& I, const std::vector<Poly>& xseq,
                                    const std::string& instance_id,
                                    const GBLimits& lim = default_limits());

// Syz^d(M) = coker(phi_{d+1}) has a free summand iff some minimal generator
// of ker(phi_{d+1}^t) has a unit entry.
CheckReport free_summand_of_syzygy(const Presentation& M, int d, const std::string& instance_id,
                                   const GBLimits& lim = default_limits());

// Tor-criterion detector: Syz^d(Omega) has a free summand iff
// Tor_d(k, Omega) -> Tor_d(k, S) induced by Omega -> S is nonzero.
// Also runs the direct detector on the Ext realization and reports agreement.
CheckReport free_summand_via_tor(const Ideal& I, const std::vector<Poly>& xseq,
                                 const std::string& instance_id,
                                 const GBLimits& lim = default_limits());

// Edge homomorphism non-vanishing, evaluated through the proven equivalent
// Tor criterion with an auto-selected regular sequence.
CheckReport edge_nonzero(const Ideal& I, std::uint64_t seed, const std::string& instance_id,
                         const GBLimits& lim = default_limits());

// (prod sop)^t not in J + (sop_i^{t+1}) over A = R/J.
CheckReport monomial_test(const Ideal& J, const std::vector<Poly>& sop, int t,
                          const std::string& instance_id,
                          const GBLimits& lim = default_limits());

// d homogeneous elements of I of a common degree with grade exactly d;
// deterministic per seed, retry budget 32.
std::vector<Poly> regular_sequence_in(const Ideal& I, int d, std::uint64_t seed,
                                      const GBLimits& lim = default_limits());

// Almost complete intersection companion (x_1..x_d, lambda) of P with
// colon((x), (lambda)) = colon((x), P); the report verifies the defining
// equality and that both canonical modules agree in Hilbert function and nu.
struct AciResult {
    std::vector<Poly> xseq;
    Poly lambda;
    CheckReport report;
};
AciResult aci_companion(const Ideal& P, std::uint64_t seed, const std::string& instance_id,
                        const GBLimits& lim = default_limits());

// Equidimensional-hull test: I unmixed iff I = ann(Ext^d(R/I, R)).
CheckReport unmixed_check(const Ideal& I, const std::string& instance_id,
                          const GBLimits& lim = default_limits());

// R/I satisfies S_s iff dim Ext^i(R/I, R) <= n - i - s for all i > d.
CheckReport serre_check(const Ideal& I, int s, const std::string& instance_id,
                        const GBLimits& lim = default_limits());

// free summand of Syz^d(R/P) forces one for Syz^d(Omega)
CheckReport thm33_implication(const Ideal& P, const std::string& instance_id,
                              const GBLimits& lim = default_limits());

// nu(Omega) <= 2 and Serre condition force a free summand of Syz^d(Omega)
CheckReport thm34_implication(const Ideal& P, const std::string& instance_id,
                              const GBLimits& lim = default_limits());

// Resolution certificate (exactness, minimality, length, Betti/Tor/mod-m
// three-way rank agreement) packaged as a report.
CheckReport resolution_report(const Presentation& M, const std::string& instance_id,
                              const GBLimits& lim = default_limits());

}  // namespace oideal

#endif
